//! The quantum torus `K[T1^±1, T2^±1, T3^±1]` with `T1 T2 = s T2 T1`,
//! `T1 T3 = r T3 T1`, `T2 T3 = T3 T2`, obtained from the localized algebra
//! by also inverting `d` (`T1 = d`, `T2 = x`, `T3 = y`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::pbw::{BasisWord, DownUp, Element};
use crate::scalar::{Case, Scalar};

/// The monomial `T2^b T3^c T1^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusMono {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl TorusMono {
    pub const UNIT: TorusMono = TorusMono { a: 0, b: 0, c: 0 };

    pub fn new(a: i64, b: i64, c: i64) -> TorusMono {
        TorusMono { a, b, c }
    }
}

impl Ord for TorusMono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b, self.c).cmp(&(other.a, other.b, other.c))
    }
}

impl PartialOrd for TorusMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TorusMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("T2", self.b), ("T3", self.c), ("T1", self.a)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// The three torus generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusGen {
    T1,
    T2,
    T3,
}

impl TorusGen {
    pub const ALL: [TorusGen; 3] = [TorusGen::T1, TorusGen::T2, TorusGen::T3];

    pub fn mono(self) -> TorusMono {
        match self {
            TorusGen::T1 => TorusMono::new(1, 0, 0),
            TorusGen::T2 => TorusMono::new(0, 1, 0),
            TorusGen::T3 => TorusMono::new(0, 0, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TorusElement {
    terms: BTreeMap<TorusMono, Scalar>,
}

impl TorusElement {
    pub fn zero() -> TorusElement {
        TorusElement::default()
    }

    pub fn one() -> TorusElement {
        TorusElement::mono(TorusMono::UNIT)
    }

    pub fn mono(m: TorusMono) -> TorusElement {
        TorusElement::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: TorusMono) -> TorusElement {
        let mut t = TorusElement::zero();
        t.add_term(m, c);
        t
    }

    pub fn gen(g: TorusGen) -> TorusElement {
        TorusElement::mono(g.mono())
    }

    pub fn from_terms<I: IntoIterator<Item = (TorusMono, Scalar)>>(it: I) -> TorusElement {
        let mut t = TorusElement::zero();
        for (m, c) in it {
            t.add_term(m, c);
        }
        t
    }

    pub fn add_term(&mut self, m: TorusMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&TorusMono, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &TorusMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms; emptiness is [`is_zero`](Self::is_zero).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Scalar) -> TorusElement {
        if c.is_zero() {
            return TorusElement::zero();
        }
        TorusElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }
}

impl Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, other: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, other: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        TorusElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            if *m != TorusMono::UNIT {
                write!(f, " {m}")?;
            }
        }
        Ok(())
    }
}

type LaurentTerm = ((i64, i64), Scalar);

/// Torus arithmetic together with the embedding of the localized algebra.
#[derive(Clone, Debug)]
pub struct QuantumTorus {
    alg: DownUp,
}

impl QuantumTorus {
    pub fn new(case: Case) -> QuantumTorus {
        QuantumTorus {
            alg: DownUp::new(case),
        }
    }

    pub fn case(&self) -> Case {
        self.alg.case()
    }

    pub fn algebra(&self) -> &DownUp {
        &self.alg
    }

    /// `T1^a1` moved right past `T2^b2 T3^c2` picks up `s^(a1 b2) r^(a1 c2)`.
    pub fn mono_mul(&self, m1: &TorusMono, m2: &TorusMono) -> (Scalar, TorusMono) {
        let c = self.case().param_power(m1.a * m2.c, m1.a * m2.b);
        (c, TorusMono::new(m1.a + m2.a, m1.b + m2.b, m1.c + m2.c))
    }

    pub fn mul(&self, x: &TorusElement, y: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (m1, c1) in &x.terms {
            for (m2, c2) in &y.terms {
                let (k, m) = self.mono_mul(m1, m2);
                out.add_term(m, &(c1 * c2) * &k);
            }
        }
        out
    }

    /// The scalar `χ` with `g T^α g^-1 = χ T^α`.
    pub fn conjugation_scalar(&self, g: TorusGen, m: &TorusMono) -> Scalar {
        let case = self.case();
        match g {
            TorusGen::T1 => case.param_power(m.c, m.b),
            TorusGen::T2 => case.param_power(0, -m.a),
            TorusGen::T3 => case.param_power(-m.a, 0),
        }
    }

    pub fn is_central_mono(&self, m: &TorusMono) -> bool {
        TorusGen::ALL
            .iter()
            .all(|&g| self.conjugation_scalar(g, m).is_one())
    }

    /// Central iff every monomial is: scalars in the first case,
    /// `K[(T2 T3)^±1]` in the second.
    pub fn is_central(&self, t: &TorusElement) -> bool {
        t.terms.keys().all(|m| self.is_central_mono(m))
    }

    pub fn embed(&self, e: &Element) -> TorusElement {
        let mut out = TorusElement::zero();
        let mut factors: BTreeMap<i64, Vec<LaurentTerm>> = BTreeMap::new();
        for (w, c) in e.terms() {
            if w.m >= 0 {
                out.add_term(TorusMono::new(w.m, w.i, w.j), c.clone());
                continue;
            }
            let l = -w.m;
            let p = factors
                .entry(l)
                .or_insert_with(|| self.alg.u_power_factor(l).into_iter().collect());
            for ((pb, pc), k) in p.iter() {
                out.add_term(TorusMono::new(-l, w.i + pb, w.j + pc), c * k);
            }
        }
        out
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn preimage(&self, t: &TorusElement) -> Result<Element> {
        let mut by_a: BTreeMap<i64, BTreeMap<(i64, i64), Scalar>> = BTreeMap::new();
        for (m, c) in &t.terms {
            by_a.entry(m.a).or_default().insert((m.b, m.c), c.clone());
        }
        let mut out = Element::zero();
        for (a, coeffs) in by_a {
            if a >= 0 {
                for ((b, c), k) in coeffs {
                    out.add_term(BasisWord::new(b, c, a), k);
                }
                continue;
            }
            let l = -a;
            let divisor: BTreeMap<(i64, i64), Scalar> =
                self.alg.u_power_factor(l).into_iter().collect();
            let quot = laurent_div_exact(&coeffs, &divisor).ok_or_else(|| {
                Error::NotInSubalgebra(format!(
                    "coefficient of T1^{a} is not divisible by the u^{l} factor"
                ))
            })?;
            for ((b, c), k) in quot {
                out.add_term(BasisWord::new(b, c, a), k);
            }
        }
        Ok(out)
    }
}

/// Exact division of Laurent polynomials in two variables by a polynomial
/// divisor containing a pure power of the second variable (so it has no
/// monomial factor). Lex order, first variable dominant.
fn laurent_div_exact(
    num: &BTreeMap<(i64, i64), Scalar>,
    den: &BTreeMap<(i64, i64), Scalar>,
) -> Option<BTreeMap<(i64, i64), Scalar>> {
    let (lead, lead_c) = den.iter().next_back().map(|(k, v)| (*k, v.clone()))?;
    let lead_inv = lead_c.inv().ok()?;
    // an exact quotient has first exponents >= floor; each step strictly
    // lowers the first exponent of the terms it adds, so this terminates
    let floor = num.keys().map(|k| k.0).min().unwrap_or(0) - den.keys().map(|k| k.0).min()?;
    let mut rem = num.clone();
    let mut quot = BTreeMap::new();
    while let Some((m, c)) = rem.iter().next_back().map(|(k, v)| (*k, v.clone())) {
        let shift = (m.0 - lead.0, m.1 - lead.1);
        if shift.0 < floor {
            return None;
        }
        let q = &c * &lead_inv;
        for (dm, dc) in den {
            let key = (dm.0 + shift.0, dm.1 + shift.1);
            let slot = rem.entry(key).or_insert_with(Scalar::zero);
            *slot = &*slot - &(&q * dc);
            if slot.is_zero() {
                rem.remove(&key);
            }
        }
        quot.insert(shift, q);
    }
    Some(quot)
}
