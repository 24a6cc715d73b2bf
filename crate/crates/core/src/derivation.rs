//! Derivations of the localized algebra given by their values on `d`, `u`,
//! and the decomposition `D = ad_t + μ1 D1 + μ2 D2` with central `μ`s.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::pbw::{BasisWord, DownUp, Element};
use crate::scalar::{Case, Scalar};
use crate::torus::{QuantumTorus, TorusElement, TorusGen, TorusMono};

/// A derivation given by `D(d)` and `D(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivSpec {
    pub dd: Element,
    pub du: Element,
}

impl DerivSpec {
    pub fn new(dd: Element, du: Element) -> DerivSpec {
        DerivSpec { dd, du }
    }

    pub fn zero() -> DerivSpec {
        DerivSpec::new(Element::zero(), Element::zero())
    }

    pub fn add(&self, other: &DerivSpec) -> DerivSpec {
        DerivSpec::new(&self.dd + &other.dd, &self.du + &other.du)
    }

    pub fn scale(&self, c: &Scalar) -> DerivSpec {
        DerivSpec::new(self.dd.scale(c), self.du.scale(c))
    }

    /// `c·D` for a central `c`.
    pub fn scale_central(&self, alg: &DownUp, c: &CenterElement) -> DerivSpec {
        let c = c.to_element();
        DerivSpec::new(alg.mul(&c, &self.dd), alg.mul(&c, &self.du))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `d ↦ d`, `u ↦ 0`.
    D1,
    /// `d ↦ 0`, `u ↦ u`.
    D2,
}

/// A Laurent polynomial in `z = xy`. Only constants are central in the
/// first case.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CenterElement {
    terms: BTreeMap<i64, Scalar>,
}

impl CenterElement {
    pub fn zero() -> CenterElement {
        CenterElement::default()
    }

    pub fn constant(c: Scalar) -> CenterElement {
        CenterElement::from_terms([(0, c)])
    }

    pub fn z_power(n: i64) -> CenterElement {
        CenterElement::from_terms([(n, Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(it: I) -> CenterElement {
        let mut out = CenterElement::zero();
        for (n, c) in it {
            out.add_term(n, c);
        }
        out
    }

    pub fn add_term(&mut self, n: i64, c: Scalar) {
        let v = match self.terms.remove(&n) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(n, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn to_element(&self) -> Element {
        Element::from_terms(
            self.terms
                .iter()
                .map(|(n, c)| (BasisWord::laurent(*n, *n), c.clone())),
        )
    }

    /// Reads a Laurent polynomial in `z` back from an element; `None` if
    /// some term is not a power of `z`.
    pub fn from_element(e: &Element) -> Option<CenterElement> {
        let mut out = CenterElement::zero();
        for (w, c) in e.terms() {
            if w.m != 0 || w.i != w.j {
                return None;
            }
            out.add_term(w.i, c.clone());
        }
        Some(out)
    }

    pub fn add(&self, other: &CenterElement) -> CenterElement {
        let mut out = self.clone();
        for (n, c) in other.terms() {
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CenterElement) -> CenterElement {
        let mut out = self.clone();
        for (n, c) in other.terms() {
            out.add_term(n, -c);
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> CenterElement {
        CenterElement::from_terms(self.terms().map(|(n, c)| (n, c * k)))
    }

    /// Is this central for `case`?
    pub fn fits(&self, case: Case) -> bool {
        case == Case::Two || self.terms.keys().all(|&n| n == 0)
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_scalar() {
            return write!(f, "{c}");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(n, c)| match n {
                0 => format!("({c})"),
                1 => format!("({c}) z"),
                _ => format!("({c}) z^{n}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub t: Element,
    pub mu1: CenterElement,
    pub mu2: CenterElement,
}

impl Decomposition {
    /// `ad_t + μ1 D1 + μ2 D2` as a derivation.
    pub fn reconstruct(&self, alg: &DownUp) -> DerivSpec {
        inner(alg, &self.t)
            .add(&base_derivation(Base::D1).scale_central(alg, &self.mu1))
            .add(&base_derivation(Base::D2).scale_central(alg, &self.mu2))
    }
}

/// `ad_t`: `e ↦ t e − e t`.
pub fn inner(alg: &DownUp, t: &Element) -> DerivSpec {
    DerivSpec::new(
        alg.commutator(t, &Element::d()),
        alg.commutator(t, &Element::u()),
    )
}

pub fn base_derivation(which: Base) -> DerivSpec {
    match which {
        Base::D1 => DerivSpec::new(Element::d(), Element::zero()),
        Base::D2 => DerivSpec::new(Element::zero(), Element::u()),
    }
}

/// The Leibniz extension of a derivation spec, with cached values on powers.
pub struct Leibniz<'a> {
    alg: &'a DownUp,
    cache: HashMap<(u8, i64), (Element, Element)>,
    gens: [(Element, Element); 4],
    inverses: [Element; 2],
}

impl<'a> Leibniz<'a> {
    pub fn new(alg: &'a DownUp, s: &DerivSpec) -> Leibniz<'a> {
        let (d, u) = (Element::d(), Element::u());
        let dx = leibniz_x(alg, &s.dd, &s.du, alg.r());
        let dy = leibniz_x(alg, &s.dd, &s.du, alg.s());
        let x_inv = Element::word(BasisWord::laurent(-1, 0));
        let y_inv = Element::word(BasisWord::laurent(0, -1));
        Leibniz {
            alg,
            cache: HashMap::new(),
            gens: [
                (Element::x(), dx),
                (Element::y(), dy),
                (d, s.dd.clone()),
                (u, s.du.clone()),
            ],
            inverses: [x_inv, y_inv],
        }
    }

    pub fn on_x(&self) -> &Element {
        &self.gens[0].1
    }

    pub fn on_y(&self) -> &Element {
        &self.gens[1].1
    }

    /// `D(g^{-1}) = −g^{-1} D(g) g^{-1}` for `g = x, y`.
    fn on_inverse(&self, which: u8) -> (Element, Element) {
        let inv = &self.inverses[which as usize];
        let dg = &self.gens[which as usize].1;
        let v = -self.alg.mul(&self.alg.mul(inv, dg), inv);
        (inv.clone(), v)
    }

    /// `(g^n, D(g^n))`; `which` indexes x, y, d, u.
    fn power(&mut self, which: u8, n: i64) -> (Element, Element) {
        if n == 0 {
            return (Element::one(), Element::zero());
        }
        if let Some(v) = self.cache.get(&(which, n)) {
            return v.clone();
        }
        let (g, dg) = if n > 0 {
            self.gens[which as usize].clone()
        } else {
            self.on_inverse(which)
        };
        let (p, dp) = self.power(which, if n > 0 { n - 1 } else { n + 1 });
        let v = (
            self.alg.mul(&p, &g),
            &self.alg.mul(&dp, &g) + &self.alg.mul(&p, &dg),
        );
        self.cache.insert((which, n), v.clone());
        v
    }

    pub fn word(&mut self, w: &BasisWord) -> Element {
        let (xp, dxp) = self.power(0, w.i);
        let (yp, dyp) = self.power(1, w.j);
        let (tp, dtp) = if w.m >= 0 {
            self.power(2, w.m)
        } else {
            self.power(3, -w.m)
        };
        let a = self.alg;
        let xy = a.mul(&xp, &yp);
        let dxy = &a.mul(&dxp, &yp) + &a.mul(&xp, &dyp);
        &a.mul(&dxy, &tp) + &a.mul(&xy, &dtp)
    }

    pub fn apply(&mut self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out = &out + &self.word(w).scale(c);
        }
        out
    }
}

/// `D(du − c·ud)`; `c = r` gives `D(x)`, `c = s` gives `D(y)`.
fn leibniz_x(alg: &DownUp, dd: &Element, du: &Element, c: &Scalar) -> Element {
    let (d, u) = (Element::d(), Element::u());
    let a = &alg.mul(dd, &u) + &alg.mul(&d, du);
    let b = &alg.mul(du, &d) + &alg.mul(&u, dd);
    &a - &b.scale(c)
}

/// Leibniz image of a product of letters.
fn leibniz_string(alg: &DownUp, letters: &[(&Element, &Element)]) -> Element {
    let mut out = Element::zero();
    for k in 0..letters.len() {
        let mut p = Element::one();
        for (n, (g, dg)) in letters.iter().enumerate() {
            p = alg.mul(&p, if n == k { dg } else { g });
        }
        out = &out + &p;
    }
    out
}

/// Does the spec annihilate both defining relations, and is its extension
/// to `x^{-1}`, `y^{-1}` consistent?
pub fn check_deriv(alg: &DownUp, s: &DerivSpec) -> bool {
    let (d, u) = (Element::d(), Element::u());
    let dl = (&d, &s.dd);
    let ul = (&u, &s.du);
    let alpha = alg.case().alpha();
    let beta = alg.case().beta();
    let rel = |a: [(&Element, &Element); 3],
               b: [(&Element, &Element); 3],
               c: [(&Element, &Element); 3]| {
        &(&leibniz_string(alg, &a) - &leibniz_string(alg, &b).scale(&alpha))
            - &leibniz_string(alg, &c).scale(&beta)
    };
    if !rel([dl, dl, ul], [dl, ul, dl], [ul, dl, dl]).is_zero()
        || !rel([dl, ul, ul], [ul, dl, ul], [ul, ul, dl]).is_zero()
    {
        return false;
    }
    let lz = Leibniz::new(alg, s);
    for which in [0u8, 1] {
        let (g, dg) = &lz.gens[which as usize];
        let (gi, dgi) = lz.on_inverse(which);
        let left = &alg.mul(dg, &gi) + &alg.mul(g, &dgi);
        let right = &alg.mul(&dgi, g) + &alg.mul(&gi, dg);
        if !left.is_zero() || !right.is_zero() {
            return false;
        }
    }
    true
}

pub fn apply_deriv(alg: &DownUp, s: &DerivSpec, e: &Element) -> Element {
    Leibniz::new(alg, s).apply(e)
}

fn center_from_torus(case: Case, w: &TorusElement) -> CenterElement {
    let mut out = CenterElement::zero();
    for (m, c) in w.terms() {
        let central = m.a == 0
            && match case {
                Case::One => m.b == 0 && m.c == 0,
                Case::Two => m.b == m.c,
            };
        if central {
            out.add_term(m.b, c.clone());
        }
    }
    out
}

/// Splits a derivation into an inner part and central multiples of `D1`, `D2`.
/// The inner witness has no central component.
pub fn decompose(alg: &DownUp, s: &DerivSpec) -> Result<Decomposition> {
    let case = alg.case();
    let torus = QuantumTorus::new(case);
    let lz = Leibniz::new(alg, s);
    let values = [
        (TorusGen::T1, torus.embed(&s.dd)),
        (TorusGen::T2, torus.embed(lz.on_x())),
        (TorusGen::T3, torus.embed(lz.on_y())),
    ];
    // W_g = δ(g) g^{-1}
    let w: Vec<(TorusGen, TorusElement)> = values
        .into_iter()
        .map(|(g, v)| {
            let m = g.mono();
            let inv = TorusElement::mono(TorusMono::new(-m.a, -m.b, -m.c));
            (g, torus.mul(&v, &inv))
        })
        .collect();
    let mut support: Vec<TorusMono> = w
        .iter()
        .flat_map(|(_, e)| e.terms().map(|(m, _)| *m))
        .collect();
    support.sort();
    support.dedup();
    let mut t = TorusElement::zero();
    for alpha in support {
        if torus.is_central_mono(&alpha) {
            continue;
        }
        let chis: Vec<Scalar> = w
            .iter()
            .map(|(g, _)| torus.conjugation_scalar(*g, &alpha))
            .collect();
        let (idx, chi) = chis
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_one())
            .ok_or_else(|| Error::Internal(format!("{alpha} is not central but all χ are 1")))?;
        let one_minus = |c: &Scalar| &Scalar::one() - c;
        let t_alpha = w[idx].1.coeff(&alpha).checked_div(&one_minus(chi))?;
        for ((g, wg), c) in w.iter().zip(&chis) {
            if wg.coeff(&alpha) != &t_alpha * &one_minus(c) {
                return Err(Error::NotADerivation(format!(
                    "inner part is inconsistent at {alpha} for {g:?}"
                )));
            }
        }
        t.add_term(alpha, t_alpha);
    }
    let f1 = center_from_torus(case, &w[0].1);
    let f2 = center_from_torus(case, &w[1].1);
    let f3 = center_from_torus(case, &w[2].1);
    if f2 != f3 {
        return Err(Error::NotADerivation(format!(
            "central multipliers of x and y differ: {f2} vs {f3}"
        )));
    }
    let t = torus
        .preimage(&t)
        .map_err(|e| Error::Internal(format!("inner witness outside the algebra: {e}")))?;
    let dec = Decomposition {
        t,
        mu2: f2.sub(&f1),
        mu1: f1,
    };
    if dec.reconstruct(alg) != *s {
        return Err(Error::NotADerivation(
            "reconstruction does not reproduce the values on d and u".into(),
        ));
    }
    Ok(dec)
}

/// Coordinates of the class of `s` in the first Hochschild cohomology.
pub fn hh1_coords(alg: &DownUp, s: &DerivSpec) -> Result<(CenterElement, CenterElement)> {
    decompose(alg, s).map(|d| (d.mu1, d.mu2))
}
