//! Seeded random generators for elements and scalars, shared by the test
//! suites and benchmarks.

use rand::Rng;

use crate::morphism::{ClassifiedEndo, EndoKind};
use crate::pbw::{BasisWord, Element};
use crate::scalar::{Case, Scalar};

/// A small nonzero scalar: `c r^a s^b` with `|c| <= 3`, `|a|, |b| <= 1`,
/// occasionally shifted by one so that non-monomial coefficients appear.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, case: Case) -> Scalar {
    loop {
        let c = rng.gen_range(-3i64..=3);
        if c == 0 {
            continue;
        }
        let base =
            &Scalar::from_int(c) * &case.param_power(rng.gen_range(-1..=1), rng.gen_range(-1..=1));
        let v = if rng.gen_bool(0.2) {
            &base + &Scalar::one()
        } else {
            base
        };
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn word<R: Rng + ?Sized>(rng: &mut R, exp: i64) -> BasisWord {
    BasisWord::new(
        rng.gen_range(-exp..=exp),
        rng.gen_range(-exp..=exp),
        rng.gen_range(-exp..=exp),
    )
}

/// Between one and `max_terms` terms, all word exponents in `[-exp, exp]`.
pub fn element<R: Rng + ?Sized>(rng: &mut R, case: Case, max_terms: usize, exp: i64) -> Element {
    let n = rng.gen_range(1..=max_terms);
    Element::from_terms((0..n).map(|_| (word(rng, exp), scalar(rng, case))))
}

/// A Laurent polynomial in `z = xy` of degree at most `deg` in `|z|`.
pub fn z_laurent<R: Rng + ?Sized>(rng: &mut R, case: Case, deg: i64) -> Element {
    let n = rng.gen_range(1..=3);
    Element::from_terms((0..n).map(|_| {
        let e = rng.gen_range(-deg..=deg);
        (BasisWord::laurent(e, e), scalar(rng, case))
    }))
}

/// A classified endomorphism satisfying the exponent constraints of `case`.
/// `twist` fixes `i + k = j + l` in the second case and is ignored in the first.
pub fn endo<R: Rng + ?Sized>(
    rng: &mut R,
    case: Case,
    kind: EndoKind,
    twist: i64,
) -> ClassifiedEndo {
    let e = match (case, kind) {
        (Case::One, EndoKind::Straight) => 0,
        (Case::One, EndoKind::Swap) => -1,
        (Case::Two, _) => twist,
    };
    let i = rng.gen_range(-3..=3);
    let j = rng.gen_range(-3..=3);
    ClassifiedEndo::new(
        kind,
        scalar(rng, case),
        scalar(rng, case),
        i,
        j,
        e - i,
        e - j,
    )
}
