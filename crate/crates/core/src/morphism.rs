//! Algebra endomorphisms of the localized down-up algebra.
//!
//! Every endomorphism of the localization sends `d, u` to unit multiples of
//! `d, u` (straight) or of `u, d` (swap). [`ClassifiedEndo`] stores that
//! parameter tuple; [`GenImages`] holds arbitrary generator images so that
//! candidate maps can be checked before they are classified.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::pbw::{BasisWord, DownUp, Element};
use crate::scalar::Scalar;

/// Images of the generators `d` and `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenImages {
    pub d: Element,
    pub u: Element,
}

impl GenImages {
    pub fn new(d: Element, u: Element) -> GenImages {
        GenImages { d, u }
    }

    pub fn identity() -> GenImages {
        GenImages::new(Element::d(), Element::u())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndoKind {
    /// `d ↦ γ1 x^i y^j d`, `u ↦ γ2 x^k y^l u`.
    Straight,
    /// `d ↦ γ1 x^i y^j u`, `u ↦ γ2 x^k y^l d`.
    Swap,
}

impl fmt::Display for EndoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EndoKind::Straight => "straight",
            EndoKind::Swap => "swap",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedEndo {
    pub kind: EndoKind,
    pub gamma1: Scalar,
    pub gamma2: Scalar,
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub l: i64,
}

impl ClassifiedEndo {
    pub fn new(
        kind: EndoKind,
        gamma1: Scalar,
        gamma2: Scalar,
        i: i64,
        j: i64,
        k: i64,
        l: i64,
    ) -> Self {
        ClassifiedEndo {
            kind,
            gamma1,
            gamma2,
            i,
            j,
            k,
            l,
        }
    }

    pub fn identity() -> ClassifiedEndo {
        ClassifiedEndo::new(EndoKind::Straight, Scalar::one(), Scalar::one(), 0, 0, 0, 0)
    }

    /// Shorthand with unit `γ`s.
    pub fn monomial(kind: EndoKind, i: i64, j: i64, k: i64, l: i64) -> ClassifiedEndo {
        ClassifiedEndo::new(kind, Scalar::one(), Scalar::one(), i, j, k, l)
    }

    /// The common value of `i + k` and `j + l` (the `z`-twist in the second case).
    pub fn twist(&self) -> i64 {
        self.i + self.k
    }

    fn dirs(&self) -> (i64, i64) {
        match self.kind {
            EndoKind::Straight => (1, -1),
            EndoKind::Swap => (-1, 1),
        }
    }

    pub fn images(&self) -> GenImages {
        let (dd, du) = self.dirs();
        GenImages::new(
            Element::term(self.gamma1.clone(), BasisWord::new(self.i, self.j, dd)),
            Element::term(self.gamma2.clone(), BasisWord::new(self.k, self.l, du)),
        )
    }
}

impl fmt::Display for ClassifiedEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind = {}, gamma1 = {}, gamma2 = {}, i = {}, j = {}, k = {}, l = {}",
            self.kind, self.gamma1, self.gamma2, self.i, self.j, self.k, self.l
        )
    }
}

/// Do the images satisfy both defining relations? In the localized algebra
/// the induced images of `x` and `y` must also be units.
pub fn check_endo(alg: &DownUp, g: &GenImages, localized: bool) -> bool {
    if !alg.d_relation(&g.d, &g.u).is_zero() || !alg.u_relation(&g.d, &g.u).is_zero() {
        return false;
    }
    if localized {
        let x = alg.x_from(&g.d, &g.u);
        let y = alg.y_from(&g.d, &g.u);
        return alg.is_invertible(&x).is_some() && alg.is_invertible(&y).is_some();
    }
    true
}

pub fn classify(alg: &DownUp, g: &GenImages) -> Result<ClassifiedEndo> {
    let (Some((wd, cd)), Some((wu, cu))) = (g.d.single_term(), g.u.single_term()) else {
        return Err(Error::NotClassifiable(
            "generator images are not single monomial terms".into(),
        ));
    };
    let kind = match (wd.m, wu.m) {
        (1, -1) => EndoKind::Straight,
        (-1, 1) => EndoKind::Swap,
        _ => {
            return Err(Error::NotClassifiable(format!(
                "images {} and {} are not unit multiples of d, u or u, d",
                g.d, g.u
            )))
        }
    };
    if !check_endo(alg, g, true) {
        return Err(Error::NotClassifiable(
            "images do not define an endomorphism of the localized algebra".into(),
        ));
    }
    Ok(ClassifiedEndo::new(
        kind,
        cd.clone(),
        cu.clone(),
        wd.i,
        wd.j,
        wu.i,
        wu.j,
    ))
}

/// Extends generator images multiplicatively over PBW words.
pub struct Applier<'a> {
    alg: &'a DownUp,
    d: Element,
    u: Element,
    x: Element,
    y: Element,
    x_inv: Option<Element>,
    y_inv: Option<Element>,
    powers: HashMap<(u8, i64), Element>,
}

impl<'a> Applier<'a> {
    pub fn new(alg: &'a DownUp, g: &GenImages) -> Applier<'a> {
        let x = alg.x_from(&g.d, &g.u);
        let y = alg.y_from(&g.d, &g.u);
        Applier {
            alg,
            x_inv: alg.is_invertible(&x),
            y_inv: alg.is_invertible(&y),
            d: g.d.clone(),
            u: g.u.clone(),
            x,
            y,
            powers: HashMap::new(),
        }
    }

    pub fn x_image(&self) -> &Element {
        &self.x
    }

    pub fn y_image(&self) -> &Element {
        &self.y
    }

    fn power(&mut self, which: u8, n: i64) -> Result<Element> {
        if n == 0 {
            return Ok(Element::one());
        }
        if let Some(p) = self.powers.get(&(which, n)) {
            return Ok(p.clone());
        }
        let base = match (which, n > 0) {
            (0, true) => self.x.clone(),
            (0, false) => self
                .x_inv
                .clone()
                .ok_or_else(|| Error::NotInvertible(format!("image of x is {}", self.x)))?,
            (1, true) => self.y.clone(),
            (1, false) => self
                .y_inv
                .clone()
                .ok_or_else(|| Error::NotInvertible(format!("image of y is {}", self.y)))?,
            (2, _) => self.d.clone(),
            _ => self.u.clone(),
        };
        let step = if n > 0 { n - 1 } else { n + 1 };
        let prev = self.power(which, step)?;
        let p = self.alg.mul(&prev, &base);
        self.powers.insert((which, n), p.clone());
        Ok(p)
    }

    pub fn word(&mut self, w: &BasisWord) -> Result<Element> {
        let xi = self.power(0, w.i)?;
        let yj = self.power(1, w.j)?;
        let t = if w.m >= 0 {
            self.power(2, w.m)?
        } else {
            self.power(3, -w.m)?
        };
        Ok(self.alg.mul(&self.alg.mul(&xi, &yj), &t))
    }

    pub fn apply(&mut self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out = &out + &self.word(w)?.scale(c);
        }
        Ok(out)
    }
}

/// Image of `e` under arbitrary generator images; negative `x`/`y` powers
/// need unit images.
pub fn apply_images(alg: &DownUp, g: &GenImages, e: &Element) -> Result<Element> {
    Applier::new(alg, g).apply(e)
}

pub fn apply(alg: &DownUp, m: &ClassifiedEndo, e: &Element) -> Element {
    apply_images(alg, &m.images(), e).expect("classified endomorphisms send x, y to units")
}

/// `f ∘ g` computed on generators and reclassified.
pub fn compose(alg: &DownUp, f: &ClassifiedEndo, g: &ClassifiedEndo) -> Result<ClassifiedEndo> {
    let mut ap = Applier::new(alg, &f.images());
    let gi = g.images();
    let images = GenImages::new(ap.apply(&gi.d)?, ap.apply(&gi.u)?);
    classify(alg, &images)
}

/// How a classified map acts on the Laurent part: `x ↦ λx x^p1 y^q1`,
/// `y ↦ λy x^p2 y^q2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentAction {
    pub lambda_x: Scalar,
    pub x_exp: (i64, i64),
    pub lambda_y: Scalar,
    pub y_exp: (i64, i64),
}

impl LaurentAction {
    pub fn det(&self) -> i64 {
        self.x_exp.0 * self.y_exp.1 - self.y_exp.0 * self.x_exp.1
    }

    /// `x^a y^b ↦ coeff · x^e1 y^e2`.
    pub fn on_laurent(&self, a: i64, b: i64) -> (Scalar, i64, i64) {
        let c = &self.lambda_x.pow(a).expect("nonzero") * &self.lambda_y.pow(b).expect("nonzero");
        (
            c,
            a * self.x_exp.0 + b * self.y_exp.0,
            a * self.x_exp.1 + b * self.y_exp.1,
        )
    }
}

/// The Laurent action read off from the closed forms of `θ(x)`, `θ(y)`.
pub fn laurent_action(alg: &DownUp, m: &ClassifiedEndo) -> LaurentAction {
    let case = alg.case();
    let g = &m.gamma1 * &m.gamma2;
    let e = m.twist();
    match m.kind {
        EndoKind::Straight => {
            let lambda = &g * &case.param_power(m.l, m.k);
            LaurentAction {
                lambda_x: lambda.clone(),
                x_exp: (e + 1, e),
                lambda_y: lambda,
                y_exp: (e, e + 1),
            }
        }
        EndoKind::Swap => LaurentAction {
            lambda_x: -(&g * &case.param_power(m.j + 1, m.i)),
            x_exp: (e, e + 1),
            lambda_y: -(&g * &case.param_power(m.j, m.i + 1)),
            y_exp: (e + 1, e),
        },
    }
}

/// `f ∘ g` by parameter arithmetic alone.
pub fn compose_params(alg: &DownUp, f: &ClassifiedEndo, g: &ClassifiedEndo) -> ClassifiedEndo {
    let act = laurent_action(alg, f);
    let (fdd, fdu) = f.dirs();
    // f applied to γ x^a y^b X^dir
    let push = |gamma: &Scalar, a: i64, b: i64, dir: i64| -> (Scalar, i64, i64, i64) {
        let (c, e1, e2) = act.on_laurent(a, b);
        let (fg, fa, fb, fdir) = if dir > 0 {
            (&f.gamma1, f.i, f.j, fdd)
        } else {
            (&f.gamma2, f.k, f.l, fdu)
        };
        (&(gamma * &c) * fg, e1 + fa, e2 + fb, fdir)
    };
    let (gdd, gdu) = g.dirs();
    let (c1, i, j, dir) = push(&g.gamma1, g.i, g.j, gdd);
    let (c2, k, l, _) = push(&g.gamma2, g.k, g.l, gdu);
    let kind = if dir > 0 {
        EndoKind::Straight
    } else {
        EndoKind::Swap
    };
    ClassifiedEndo::new(kind, c1, c2, i, j, k, l)
}

/// The exponent `n` with `θ(z) = λ z^n`; defined whenever `θ(z)` is a power of `z`.
pub fn center_exponent(alg: &DownUp, m: &ClassifiedEndo) -> Option<i64> {
    let img = apply(alg, m, &Element::z());
    let (w, _) = img.single_term()?;
    (w.m == 0 && w.i == w.j).then_some(w.i)
}

/// Solves `θ ∘ φ = id` for `φ` in the classified family.
pub fn invert(alg: &DownUp, m: &ClassifiedEndo) -> Result<ClassifiedEndo> {
    let mut ap = Applier::new(alg, &m.images());
    let read = |e: &Element| -> Result<(Scalar, BasisWord)> {
        e.single_term()
            .map(|(w, c)| (c.clone(), *w))
            .ok_or_else(|| Error::Internal(format!("expected a monomial, got {e}")))
    };
    let (_, wx) = read(ap.x_image())?;
    let (_, wy) = read(ap.y_image())?;
    let det = wx.i * wy.j - wy.i * wx.j;
    if det.abs() != 1 {
        let n = center_exponent(alg, m).unwrap_or(wx.i + wy.i);
        return Err(Error::NotAutomorphism { center_exponent: n });
    }
    // φ(target) = δ x^a y^b X^dir with θ(X^dir) ∝ target
    let mut solve = |dir: i64, target: i64| -> Result<(Scalar, i64, i64)> {
        let (_, tw) = read(&ap.word(&BasisWord::new(0, 0, dir))?)?;
        if tw.m != target {
            return Err(Error::Internal(
                "generator image has the wrong grade".into(),
            ));
        }
        // [[wx.i, wy.i], [wx.j, wy.j]] (a, b) = -(tw.i, tw.j)
        let (e1, e2) = (-tw.i, -tw.j);
        let a = (wy.j * e1 - wy.i * e2) * det;
        let b = (-wx.j * e1 + wx.i * e2) * det;
        let (c, w) = read(&ap.word(&BasisWord::new(a, b, dir))?)?;
        if w != BasisWord::new(0, 0, target) {
            return Err(Error::Internal(format!("solved word maps to {w}")));
        }
        Ok((c.inv()?, a, b))
    };
    let (kind, dir_d, dir_u) = match m.kind {
        EndoKind::Straight => (EndoKind::Straight, 1, -1),
        EndoKind::Swap => (EndoKind::Swap, -1, 1),
    };
    let (g1, i, j) = solve(dir_d, 1)?;
    let (g2, k, l) = solve(dir_u, -1)?;
    let phi = ClassifiedEndo::new(kind, g1, g2, i, j, k, l);
    for comp in [compose(alg, m, &phi)?, compose(alg, &phi, m)?] {
        if comp != ClassifiedEndo::identity() {
            return Err(Error::Internal(format!(
                "solved inverse composes to {comp}"
            )));
        }
    }
    Ok(phi)
}

/// Reference closed forms for inverses in the first case, transcribed
/// literally. The swap formula's `r`, `s` exponents do not give an inverse;
/// kept only to compare against [`invert`].
pub fn reference_inverse(alg: &DownUp, m: &ClassifiedEndo) -> ClassifiedEndo {
    let case = alg.case();
    let (g1, g2) = (&m.gamma1, &m.gamma2);
    let (i, j, k, l) = (m.i, m.j, m.k, m.l);
    let pw = |s: &Scalar, e: i64| s.pow(e).expect("nonzero gamma");
    let sign = |e: i64| Scalar::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 });
    match m.kind {
        EndoKind::Straight => {
            let c1 = &(&pw(g1, i + j - 1) * &pw(g2, i + j))
                * &case.param_power(-j * (i + j), -i * (i + j));
            let c2 = &(&pw(g1, k + l) * &pw(g2, k + l - 1))
                * &case.param_power(l * (k + l), k * (k + l));
            ClassifiedEndo::new(EndoKind::Straight, c1, c2, -i, -j, -k, -l)
        }
        EndoKind::Swap => {
            let c1 = &(&(&sign(k + l) * &pw(g1, -k - l)) * &pw(g2, -k - l - 1))
                * &case.param_power(j * (k - l), k * (l - k));
            let c2 = &(&(&sign(i + j) * &pw(g1, -i - j - 1)) * &pw(g2, -i - j))
                * &case.param_power(j * (i - j), k * (j - i));
            ClassifiedEndo::new(EndoKind::Swap, c1, c2, k, l, i, j)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surjectivity {
    Automorphism,
    NotSurjectiveAtBound,
    Inconclusive,
}

impl fmt::Display for Surjectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Surjectivity::Automorphism => "automorphism",
            Surjectivity::NotSurjectiveAtBound => "not_surjective_at_bound",
            Surjectivity::Inconclusive => "inconclusive",
        })
    }
}

fn scalar_multiple_of(e: &Element, w: BasisWord) -> bool {
    e.single_term().is_some_and(|(v, _)| *v == w)
}

/// Semi-decision for surjectivity of an endomorphism of the unlocalized
/// algebra: recognizes the automorphism forms `d ↦ λd, u ↦ γu` and
/// `d ↦ λu, u ↦ γd`; otherwise looks for `d` and `u` among the span of
/// products of images of length at most `bound`.
pub fn check_surjective_unlocalized(alg: &DownUp, g: &GenImages, bound: usize) -> Surjectivity {
    let dw = BasisWord::new(0, 0, 1);
    let uw = BasisWord::new(0, 0, -1);
    if (scalar_multiple_of(&g.d, dw) && scalar_multiple_of(&g.u, uw))
        || (scalar_multiple_of(&g.d, uw) && scalar_multiple_of(&g.u, dw))
    {
        return Surjectivity::Automorphism;
    }
    let mut span = Span::new();
    span.insert(&Element::one());
    let mut level = vec![Element::one()];
    for _ in 0..bound {
        let mut next_span = Span::new();
        let mut next = Vec::new();
        for p in &level {
            for img in [&g.d, &g.u] {
                let q = alg.mul(p, img);
                if next_span.insert(&q) {
                    span.insert(&q);
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    if span.contains(&Element::d()) && span.contains(&Element::u()) {
        Surjectivity::Inconclusive
    } else {
        Surjectivity::NotSurjectiveAtBound
    }
}
