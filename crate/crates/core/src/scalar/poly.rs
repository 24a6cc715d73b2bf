//! Sparse multivariate polynomials over the integers.
//!
//! The variable set is fixed at three (`r`, `s`, `q`). Terms are kept sorted
//! in descending graded-lexicographic order with `r > s > q`, and no term
//! carries a zero coefficient, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const NVARS: usize = 3;

/// Exponent vector in graded-lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u32; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: usize, e: u32) -> Mono {
        let mut m = [0; NVARS];
        m[v] = e;
        Mono(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Mono(m)
    }

    /// `self / other` when every exponent of `other` is at most that of `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut m = [0; NVARS];
        for ((slot, a), b) in m.iter_mut().zip(self.0).zip(other.0) {
            *slot = a.checked_sub(b)?;
        }
        Some(Mono(m))
    }

    pub fn meet(&self, other: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Mono(m)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        Poly::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn var(v: usize) -> Poly {
        Poly::term(Mono::var(v, 1), BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Poly {
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (m, c) in it {
            *acc.entry(m).or_default() += c;
        }
        Poly::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Mono, BigInt>) -> Poly {
        Poly {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Poly::from_map(acc)
    }

    /// Multiplication by a single term preserves the term order.
    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Mono::ONE, c)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gcd of the integer coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Mono::ONE;
        };
        it.fold(*first, |acc, (m, _)| acc.meet(m))
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    /// Exact division. Returns `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        assert!(!other.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (t, d) in &self.terms {
                let (q, rem) = d.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                out.push((t.div(m)?, q));
            }
            return Some(Poly { terms: out });
        }
        let (lm, lc) = other.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let qm = m.div(&lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&other.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        // quotient terms come out in strictly descending order
        Some(Poly { terms: quot })
    }

    /// Splits into coefficients of powers of variable `v`; index = degree.
    pub fn to_univariate(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut parts: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            rest.0[v] = 0;
            parts[m.0[v] as usize].push((rest, c.clone()));
        }
        parts.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_univariate(coeffs: &[Poly], v: usize) -> Poly {
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (e, p) in coeffs.iter().enumerate() {
            let shift = Mono::var(v, e as u32);
            for (m, c) in &p.terms {
                *acc.entry(m.mul(&shift)).or_default() += c;
            }
        }
        Poly::from_map(acc)
    }

    /// The associate with a positive leading coefficient.
    pub fn normalized_sign(&self) -> Poly {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn lc_is_negative(&self) -> bool {
        matches!(self.terms.first(), Some((_, c)) if c.is_negative())
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &[&str; NVARS]) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Mono::ONE {
                parts.push(abs.to_string());
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(names[v].to_string()),
                    _ => parts.push(format!("{}^{}", names[v], e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// Greatest common divisor over the integers, normalized to a positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalized_sign();
    }
    if b.is_zero() || a == b {
        return a.normalized_sign();
    }
    if a.is_monomial() || b.is_monomial() {
        let (t, other) = if a.is_monomial() { (a, b) } else { (b, a) };
        let (m, c) = &t.terms[0];
        let g = c.gcd(&other.content());
        return Poly::term(m.meet(&other.monomial_content()), g);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let common = ma.meet(&mb);
    let a1 = strip_monomial(a, &ma);
    let b1 = strip_monomial(b, &mb);
    let g = gcd_rec(&a1, &b1);
    g.mul_term(&common, &BigInt::one()).normalized_sign()
}

fn strip_monomial(p: &Poly, m: &Mono) -> Poly {
    if *m == Mono::ONE {
        return p.clone();
    }
    Poly {
        terms: p
            .terms
            .iter()
            .map(|(t, c)| (t.div(m).expect("monomial content divides"), c.clone()))
            .collect(),
    }
}

fn main_var(a: &Poly, b: &Poly) -> Option<usize> {
    (0..NVARS)
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalized_sign();
    }
    if b.is_zero() {
        return a.normalized_sign();
    }
    if a.is_constant() || b.is_constant() || a.is_monomial() || b.is_monomial() {
        return gcd(a, b);
    }
    let Some(v) = main_var(a, b) else {
        return Poly::constant(a.content().gcd(&b.content()));
    };
    if a.degree_in(v) == 0 {
        return gcd(a, &content_of(&b.to_univariate(v)));
    }
    if b.degree_in(v) == 0 {
        return gcd(&content_of(&a.to_univariate(v)), b);
    }
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = content_of(&ua);
    let cb = content_of(&ub);
    let c = gcd(&ca, &cb);
    let pa = divide_all(&ua, &ca);
    let pb = divide_all(&ub, &cb);
    let (mut f, mut g) = if pa.len() >= pb.len() {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = prem(&f, &g);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            g = vec![Poly::one()];
            break;
        }
        let cr = content_of(&r);
        f = std::mem::replace(&mut g, divide_all(&r, &cr));
    }
    Poly::from_univariate(&g, v).mul(&c).normalized_sign()
}

fn content_of(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides each coefficient"))
        .collect()
}

/// Sparse pseudo-remainder of univariate views; trailing zeros trimmed.
fn prem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lcg = &g[dg];
    let mut r: Vec<Poly> = f.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > dg {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lcg);
        }
        let shift = dr - dg;
        for (i, gc) in g.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&gc.mul(&lcr));
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> Poly {
        Poly::var(0)
    }
    fn s() -> Poly {
        Poly::var(1)
    }
    fn int(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn arithmetic_basics() {
        let a = r().add(&s());
        let b = r().sub(&s());
        let prod = a.mul(&b);
        assert_eq!(prod, r().pow(2).sub(&s().pow(2)));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&r()), None);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn gcd_bivariate() {
        let common = r().mul(&s()).add(&int(1));
        let a = common.mul(&r().sub(&s())).scale(&BigInt::from(6));
        let b = common.mul(&r().add(&int(2))).scale(&BigInt::from(-4));
        assert_eq!(gcd(&a, &b), common.scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_coprime_and_monomial() {
        let a = r().pow(3).mul(&s());
        let b = r().mul(&s().pow(2)).add(&r().pow(2));
        assert_eq!(gcd(&a, &b), r());
        assert_eq!(gcd(&r().sub(&s()), &r().add(&s())), int(1));
    }

    #[test]
    fn gcd_univariate_q() {
        let q = Poly::var(2);
        let a = q.pow(4).sub(&int(1));
        let b = q.pow(6).sub(&int(1));
        assert_eq!(gcd(&a, &b), q.pow(2).sub(&int(1)));
    }

    #[test]
    fn gcd_in_one_variable_only() {
        // s^2 - 1 has no r; gcd must go through the content in r
        let a = s().pow(2).sub(&int(1));
        let b = r()
            .mul(&s().sub(&int(1)))
            .add(&s().sub(&int(1)).scale(&BigInt::from(3)));
        assert_eq!(gcd(&a, &b), s().sub(&int(1)));
    }
}
