//! The coefficient field: rational functions with integer coefficients in
//! the parameters `r`, `s` (first case) or `q` (second case).
//!
//! A [`Scalar`] is stored as a reduced fraction `num / den` whose
//! denominator has a positive leading coefficient, so two scalars are equal
//! exactly when their representations are identical.

pub mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use poly::{gcd, Mono, Poly, NVARS};

pub const VAR_NAMES: [&str; NVARS] = ["r", "s", "q"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    R = 0,
    S = 1,
    Q = 2,
}

/// Which genericity regime the parameters live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Case {
    /// `r`, `s` independent indeterminates: `r^m s^n = 1` only for `m = n = 0`.
    #[default]
    One,
    /// `r = q`, `s = q^-1` with `q` an indeterminate.
    Two,
}

impl Case {
    pub fn from_number(n: u32) -> Option<Case> {
        match n {
            1 => Some(Case::One),
            2 => Some(Case::Two),
            _ => None,
        }
    }

    pub fn number(self) -> u32 {
        match self {
            Case::One => 1,
            Case::Two => 2,
        }
    }

    pub fn r(self) -> Scalar {
        self.param_power(1, 0)
    }

    pub fn s(self) -> Scalar {
        self.param_power(0, 1)
    }

    /// `q`, available only in the second case.
    pub fn q(self) -> Option<Scalar> {
        match self {
            Case::One => None,
            Case::Two => Some(Scalar::laurent_monomial(BigInt::one(), [0, 0, 1])),
        }
    }

    pub fn alpha(self) -> Scalar {
        &self.r() + &self.s()
    }

    pub fn beta(self) -> Scalar {
        -(&self.r() * &self.s())
    }

    /// `r^m s^n`.
    pub fn param_power(self, m: i64, n: i64) -> Scalar {
        match self {
            Case::One => Scalar::laurent_monomial(BigInt::one(), [m, n, 0]),
            Case::Two => Scalar::laurent_monomial(BigInt::one(), [0, 0, m - n]),
        }
    }

    pub fn param(self, p: Param) -> Option<Scalar> {
        match p {
            Param::R => Some(self.r()),
            Param::S => Some(self.s()),
            Param::Q => self.q(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_poly(Poly::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar::from_poly(Poly::constant(n))
    }

    pub fn from_poly(num: Poly) -> Scalar {
        Scalar {
            num,
            den: Poly::one(),
        }
    }

    /// `p / q` for integers.
    pub fn ratio(p: i64, q: i64) -> Result<Scalar> {
        Scalar::from_int(p).checked_div(&Scalar::from_int(q))
    }

    /// `c * r^e0 * s^e1 * q^e2` with possibly negative exponents.
    pub fn laurent_monomial(c: BigInt, exps: [i64; NVARS]) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        let mut up = [0u32; NVARS];
        let mut down = [0u32; NVARS];
        for k in 0..NVARS {
            if exps[k] >= 0 {
                up[k] = exps[k] as u32;
            } else {
                down[k] = (-exps[k]) as u32;
            }
        }
        Scalar {
            num: Poly::term(Mono(up), c),
            den: Poly::term(Mono(down), BigInt::one()),
        }
    }

    /// Reduces `num / den` to canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.lc_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The integer value, if this scalar is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// True for `c * r^a s^b q^c` with `c` rational.
    pub fn is_monomial(&self) -> bool {
        self.num.terms().len() <= 1 && self.den.is_monomial()
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lc_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        let mut num = base.num.pow(n);
        let mut den = base.den.pow(n);
        if den.lc_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    pub fn mul_int(&self, n: i64) -> Scalar {
        self * &Scalar::from_int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Scalar::reduce(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            // gcd(a*d + c, d) = gcd(c, d) = 1
            let num = self.num.mul(&other.den).add(&other.num);
            return Scalar::canonical_sign(num, other.den.clone());
        }
        if other.den.is_one() {
            let num = other.num.mul(&self.den).add(&self.num);
            return Scalar::canonical_sign(num, self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Scalar::canonical_sign(num, self.den.mul(&other.den));
        }
        let bg = self.den.div_exact(&g).expect("gcd divides");
        let dg = other.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&dg).add(&other.num.mul(&bg));
        if t.is_zero() {
            return Scalar::zero();
        }
        let g2 = gcd(&t, &g);
        let num = t.div_exact(&g2).expect("gcd divides");
        let den = bg.mul(&other.den.div_exact(&g2).expect("gcd divides"));
        Scalar::canonical_sign(num, den)
    }
}

impl Scalar {
    fn canonical_sign(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.lc_is_negative() {
            Scalar {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            Scalar { num, den }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_poly(self.num.mul(&other.num));
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::canonical_sign(a.mul(&c), b.mul(&d))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, other: Scalar) -> Scalar {
                (&self).$m(&other)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, other: &Scalar) -> Scalar {
                (&self).$m(other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

struct PolyText<'a>(&'a Poly);

impl fmt::Display for PolyText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, &VAR_NAMES)
    }
}

fn is_bare_factor(p: &Poly) -> bool {
    match p.terms() {
        [(m, c)] if c.is_positive() => {
            let vars = m.0.iter().filter(|&&e| e > 0).count();
            (vars == 0) || (vars == 1 && c.is_one())
        }
        _ => false,
    }
}

impl fmt::Display for Scalar {
    /// Parseable text: `num` or `num/den`, parenthesizing where juxtaposed
    /// products would otherwise bind incorrectly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", PolyText(&self.num));
        }
        let num_bare = self.num.terms().len() == 1 && !self.num.lc_is_negative();
        if num_bare {
            write!(f, "{}", PolyText(&self.num))?;
        } else {
            write!(f, "({})", PolyText(&self.num))?;
        }
        if is_bare_factor(&self.den) {
            write!(f, "/{}", PolyText(&self.den))
        } else {
            write!(f, "/({})", PolyText(&self.den))
        }
    }
}
