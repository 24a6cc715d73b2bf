//! Elements of the localized down-up algebra in the PBW basis
//! `x^i y^j d^k` / `x^i y^j u^l` (`i, j` any integers).
//!
//! Multiplication runs through the generalized Weyl algebra presentation
//! over `K[x^±1, y^±1]` with `σ(x) = s x`, `σ(y) = r y`, `u d = a` and
//! `d u = σ(a)`, where `a = (x - y)/(s - r)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::{Case, Scalar};

/// One PBW basis word `x^i y^j X^m`, where `X^m = d^m` for `m >= 0` and
/// `u^-m` for `m < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisWord {
    pub i: i64,
    pub j: i64,
    pub m: i64,
}

impl BasisWord {
    pub const UNIT: BasisWord = BasisWord { i: 0, j: 0, m: 0 };

    pub fn new(i: i64, j: i64, m: i64) -> BasisWord {
        BasisWord { i, j, m }
    }

    pub fn laurent(i: i64, j: i64) -> BasisWord {
        BasisWord { i, j, m: 0 }
    }

    pub fn is_laurent(&self) -> bool {
        self.m == 0
    }
}

impl Ord for BasisWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.i, self.j).cmp(&(other.m, other.i, other.j))
    }
}

impl PartialOrd for BasisWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |name: &str, e: i64| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        };
        push("x", self.i);
        push("y", self.j);
        if self.m >= 0 {
            push("d", self.m);
        } else {
            push("u", -self.m);
        }
        f.write_str(&parts.join(" "))
    }
}

/// A finite combination of basis words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<BasisWord, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn one() -> Element {
        Element::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Element {
        Element::term(c, BasisWord::UNIT)
    }

    pub fn word(w: BasisWord) -> Element {
        Element::term(Scalar::one(), w)
    }

    pub fn term(c: Scalar, w: BasisWord) -> Element {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn d() -> Element {
        Element::word(BasisWord::new(0, 0, 1))
    }

    pub fn u() -> Element {
        Element::word(BasisWord::new(0, 0, -1))
    }

    pub fn x() -> Element {
        Element::word(BasisWord::laurent(1, 0))
    }

    pub fn y() -> Element {
        Element::word(BasisWord::laurent(0, 1))
    }

    pub fn z() -> Element {
        Element::word(BasisWord::laurent(1, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisWord, Scalar)>>(it: I) -> Element {
        let mut e = Element::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    /// Adds `c * w` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: BasisWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&BasisWord, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// The largest word and its coefficient.
    pub fn leading(&self) -> Option<(BasisWord, Scalar)> {
        self.terms.iter().next_back().map(|(w, c)| (*w, c.clone()))
    }

    pub fn coeff(&self, w: &BasisWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Number of nonzero terms; emptiness is [`is_zero`](Self::is_zero).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.single_term()
            .is_some_and(|(w, c)| *w == BasisWord::UNIT && c.is_one())
    }

    pub fn single_term(&self) -> Option<(&BasisWord, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The scalar value when the element lies in `K`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        match self.single_term() {
            Some((w, c)) if *w == BasisWord::UNIT => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, v)| (*w, v * c)).collect(),
        }
    }

    /// Membership in the unlocalized algebra: no negative `x` or `y` power.
    pub fn in_unlocalized(&self) -> bool {
        self.terms.keys().all(|w| w.i >= 0 && w.j >= 0)
    }

    /// Terms grouped by their `d`/`u` exponent.
    pub fn by_grade(&self) -> BTreeMap<i64, Vec<(BasisWord, Scalar)>> {
        let mut out: BTreeMap<i64, Vec<(BasisWord, Scalar)>> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.m).or_default().push((*w, c.clone()));
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, -c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, other: Element) -> Element {
        &self + &other
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, other: Element) -> Element {
        &self - &other
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    /// Canonical text: terms ascending by `(m, i, j)`, each `(<coeff>) <word>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            if *w != BasisWord::UNIT {
                write!(f, " {w}")?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in `x, y`, keyed by exponent pair.
pub(crate) type Laurent = HashMap<(i64, i64), Scalar>;

/// The algebra `A_S(r+s, -rs)` for a fixed parameter case; carries the
/// parameter scalars used by multiplication.
#[derive(Clone, Debug)]
pub struct DownUp {
    case: Case,
    r: Scalar,
    s: Scalar,
    inv_s_minus_r: Scalar,
}

impl DownUp {
    pub fn new(case: Case) -> DownUp {
        let r = case.r();
        let s = case.s();
        let inv_s_minus_r = (&s - &r).inv().expect("s != r for generic parameters");
        DownUp {
            case,
            r,
            s,
            inv_s_minus_r,
        }
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn r(&self) -> &Scalar {
        &self.r
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    /// The scalar by which `σ^m` acts on `x^i y^j`: `s^(m i) r^(m j)`.
    pub fn sigma_scale(&self, i: i64, j: i64, m: i64) -> Scalar {
        self.case.param_power(m * j, m * i)
    }

    fn gwa_a_coeffs(&self, m: i64) -> [((i64, i64), Scalar); 2] {
        let sx = &self.case.param_power(0, m) * &self.inv_s_minus_r;
        let ry = -(&self.case.param_power(m, 0) * &self.inv_s_minus_r);
        [((1, 0), sx), ((0, 1), ry)]
    }

    /// `σ^m(a) = (s^m x - r^m y)/(s - r)`.
    pub fn gwa_a(&self, m: i64) -> Element {
        Element::from_terms(
            self.gwa_a_coeffs(m)
                .into_iter()
                .map(|((i, j), c)| (BasisWord::laurent(i, j), c)),
        )
    }

    /// Product `σ^{e_1}(a) σ^{e_2}(a) ...` as a Laurent polynomial.
    fn gwa_product(&self, shifts: impl Iterator<Item = i64>) -> Laurent {
        let mut acc: Laurent = HashMap::from([((0, 0), Scalar::one())]);
        for e in shifts {
            let factor = self.gwa_a_coeffs(e);
            let mut next: Laurent = HashMap::with_capacity(acc.len() + 1);
            for ((i, j), c) in &acc {
                for ((fi, fj), fc) in &factor {
                    let v = c * fc;
                    let slot = next.entry((i + fi, j + fj)).or_default();
                    *slot = &*slot + &v;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        acc
    }

    /// `u^l = P(x, y) d^-l` in the torus, `P = a σ^-1(a) ... σ^-(l-1)(a)`.
    pub(crate) fn u_power_factor(&self, l: i64) -> Laurent {
        self.gwa_product((0..l).map(|t| -t))
    }

    /// `X^m1 X^m2 = P(x, y) X^(m1 + m2)`; returns `P`.
    fn du_product(&self, m1: i64, m2: i64) -> Laurent {
        if m1 >= 0 && m2 >= 0 || m1 <= 0 && m2 <= 0 {
            return HashMap::from([((0, 0), Scalar::one())]);
        }
        if m1 > 0 {
            // d^k u^l = σ^k(a) σ^(k-1)(a) ... σ^(k-n+1)(a) X^(k-l)
            let (k, l) = (m1, -m2);
            let n = k.min(l);
            self.gwa_product((0..n).map(|t| k - t))
        } else {
            // u^l d^k = σ^-(l-1)(a) ... σ^-(l-n)(a) X^(k-l)
            let (l, k) = (-m1, m2);
            let n = k.min(l);
            self.gwa_product((1..=n).map(|t| -(l - t)))
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        if a.is_zero() || b.is_zero() {
            return Element::zero();
        }
        let mut cache: HashMap<(i64, i64), Laurent> = HashMap::new();
        let mut acc: HashMap<BasisWord, Scalar> = HashMap::new();
        for (w1, c1) in &a.terms {
            for (w2, c2) in &b.terms {
                let coeff = &(c1 * c2) * &self.sigma_scale(w2.i, w2.j, w1.m);
                let poly = cache
                    .entry((w1.m, w2.m))
                    .or_insert_with(|| self.du_product(w1.m, w2.m));
                let m = w1.m + w2.m;
                for ((pi, pj), pc) in poly.iter() {
                    let w = BasisWord::new(w1.i + w2.i + pi, w1.j + w2.j + pj, m);
                    let v = &coeff * pc;
                    let slot = acc.entry(w).or_default();
                    *slot = &*slot + &v;
                }
            }
        }
        Element {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Nonnegative power.
    pub fn pow(&self, e: &Element, n: u32) -> Element {
        let mut acc = Element::one();
        for _ in 0..n {
            acc = self.mul(&acc, e);
        }
        acc
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow_signed(&self, e: &Element, n: i64) -> Option<Element> {
        if n >= 0 {
            Some(self.pow(e, n as u32))
        } else {
            let inv = self.is_invertible(e)?;
            Some(self.pow(&inv, n.unsigned_abs() as u32))
        }
    }

    /// `a b - b a`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// The inverse, when `e = λ x^k y^l`. Units have no other form.
    pub fn is_invertible(&self, e: &Element) -> Option<Element> {
        let (w, c) = e.single_term()?;
        if !w.is_laurent() {
            return None;
        }
        let inv = c.inv().ok()?;
        Some(Element::term(inv, BasisWord::laurent(-w.i, -w.j)))
    }

    /// Matches the classified normal forms: `λ x^k y^l` in the first case,
    /// `f(z) x^k` in the second (which also covers `f(z) y^l`).
    pub fn is_normal(&self, e: &Element) -> bool {
        if e.is_zero() {
            return true;
        }
        if e.terms.keys().any(|w| !w.is_laurent()) {
            return false;
        }
        match self.case {
            Case::One => e.len() == 1,
            Case::Two => {
                let mut diffs = e.terms.keys().map(|w| w.i - w.j);
                let first = diffs.next();
                diffs.all(|d| Some(d) == first)
            }
        }
    }

    /// Central elements commute with `d` and `u`, hence with `x^±1`, `y^±1`.
    pub fn is_central(&self, e: &Element) -> bool {
        self.commutator(e, &Element::d()).is_zero() && self.commutator(e, &Element::u()).is_zero()
    }

    /// `x = du - r ud`.
    pub fn x_from(&self, d_img: &Element, u_img: &Element) -> Element {
        &self.mul(d_img, u_img) - &self.mul(u_img, d_img).scale(&self.r)
    }

    /// `y = du - s ud`.
    pub fn y_from(&self, d_img: &Element, u_img: &Element) -> Element {
        &self.mul(d_img, u_img) - &self.mul(u_img, d_img).scale(&self.s)
    }

    /// `d^2 u - (r+s) dud + rs ud^2` evaluated on the given images.
    pub fn d_relation(&self, d: &Element, u: &Element) -> Element {
        let dd = self.mul(d, d);
        let ddu = self.mul(&dd, u);
        let dud = self.mul(&self.mul(d, u), d);
        let udd = self.mul(u, &dd);
        let alpha = self.case.alpha();
        let rs = &self.r * &self.s;
        &(&ddu - &dud.scale(&alpha)) + &udd.scale(&rs)
    }

    /// `d u^2 - (r+s) udu + rs u^2 d` evaluated on the given images.
    pub fn u_relation(&self, d: &Element, u: &Element) -> Element {
        let uu = self.mul(u, u);
        let duu = self.mul(d, &uu);
        let udu = self.mul(&self.mul(u, d), u);
        let uud = self.mul(&uu, d);
        let alpha = self.case.alpha();
        let rs = &self.r * &self.s;
        &(&duu - &udu.scale(&alpha)) + &uud.scale(&rs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> DownUp {
        DownUp::new(Case::One)
    }

    #[test]
    fn sigma_scale_examples() {
        let a = alg();
        assert_eq!(a.sigma_scale(1, 0, 1), a.s().clone());
        assert_eq!(a.sigma_scale(0, 1, 2), a.r() * a.r());
        assert!(a.sigma_scale(5, -3, 0).is_one());
    }

    #[test]
    fn gwa_a_matches_ud_and_du() {
        let a = alg();
        assert_eq!(a.gwa_a(0), a.mul(&Element::u(), &Element::d()));
        assert_eq!(a.gwa_a(1), a.mul(&Element::d(), &Element::u()));
        // u σ^0(a) = σ^-1(a) u
        let lhs = a.mul(&Element::u(), &a.gwa_a(0));
        let rhs = a.mul(&a.gwa_a(-1), &Element::u());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn basic_commutations() {
        let a = alg();
        let dx = a.mul(&Element::d(), &Element::x());
        assert_eq!(dx, Element::term(a.s().clone(), BasisWord::new(1, 0, 1)));
        assert_eq!(
            a.mul(&Element::x(), &Element::y()),
            a.mul(&Element::y(), &Element::x())
        );
    }

    #[test]
    fn d_squared_u() {
        let a = alg();
        let dd = a.mul(&Element::d(), &Element::d());
        let got = a.mul(&dd, &Element::u());
        let expected = a.mul(&a.gwa_a(2), &Element::d());
        assert_eq!(got, expected);
    }

    #[test]
    fn invertible_and_normal() {
        for case in [Case::One, Case::Two] {
            let a = DownUp::new(case);
            let e = Element::term(Scalar::from_int(3), BasisWord::laurent(2, -3));
            let inv = a.is_invertible(&e).unwrap();
            assert_eq!(
                inv,
                Element::term(Scalar::ratio(1, 3).unwrap(), BasisWord::laurent(-2, 3))
            );
            assert!(a.mul(&e, &inv).is_one());
            assert!(a.is_invertible(&(&Element::x() + &Element::y())).is_none());
            assert!(a.is_invertible(&Element::one()).unwrap().is_one());
            assert!(a.is_invertible(&Element::d()).is_none());
        }
        let one = alg();
        let two = DownUp::new(Case::Two);
        let e = Element::term(Scalar::from_int(5), BasisWord::laurent(-1, 2));
        assert!(one.is_normal(&e));
        let f = &(&Element::one() + &Element::z()).clone();
        let fx3 = two.mul(f, &two.pow(&Element::x(), 3));
        assert!(two.is_normal(&fx3));
        assert!(!one.is_normal(&fx3));
        assert!(!one.is_normal(&(&Element::x() + &Element::y())));
    }

    #[test]
    fn unlocalized_membership() {
        let a = alg();
        let ddu = a.mul(&a.mul(&Element::d(), &Element::d()), &Element::u());
        assert!(ddu.in_unlocalized());
        assert!(!a
            .mul(&a.is_invertible(&Element::x()).unwrap(), &Element::d())
            .in_unlocalized());
        assert!(a.gwa_a(0).in_unlocalized());
    }

    #[test]
    fn display_canonical() {
        let a = alg();
        let e = &a.x_from(&Element::d(), &Element::u()) + &Element::u();
        assert_eq!(e.to_string(), "(1) u + (1) x");
        assert_eq!(Element::zero().to_string(), "0");
    }
}
