use downup_core::morphism::{
    apply, check_endo, classify, compose, compose_params, invert, reference_inverse, ClassifiedEndo,
    EndoKind, GenImages,
};
use downup_core::{sample, BasisWord, Case, DownUp, Element, Error, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const KINDS: [EndoKind; 2] = [EndoKind::Straight, EndoKind::Swap];

fn random_endo(rng: &mut StdRng, case: Case) -> ClassifiedEndo {
    let kind = KINDS[rng.gen_range(0..2)];
    let twist = if rng.gen_bool(0.5) { 0 } else { -1 };
    sample::endo(rng, case, kind, twist)
}

fn any_endo(rng: &mut StdRng, case: Case) -> ClassifiedEndo {
    let kind = KINDS[rng.gen_range(0..2)];
    let twist = rng.gen_range(-2..=2);
    sample::endo(rng, case, kind, twist)
}

#[test]
fn sampled_families_are_endomorphisms() {
    let mut rng = StdRng::seed_from_u64(11);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..40 {
            let m = any_endo(&mut rng, case);
            assert!(check_endo(&alg, &m.images(), true), "{m}");
            assert_eq!(classify(&alg, &m.images()).unwrap(), m);
        }
    }
}

#[test]
fn closed_form_composition_matches_generators() {
    let mut rng = StdRng::seed_from_u64(12);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..40 {
            let f = any_endo(&mut rng, case);
            let g = any_endo(&mut rng, case);
            assert_eq!(compose(&alg, &f, &g).unwrap(), compose_params(&alg, &f, &g));
        }
    }
}

#[test]
fn composition_is_associative_with_identity() {
    let mut rng = StdRng::seed_from_u64(13);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..20 {
            let a = random_endo(&mut rng, case);
            let b = random_endo(&mut rng, case);
            let c = random_endo(&mut rng, case);
            let ab_c = compose(&alg, &compose(&alg, &a, &b).unwrap(), &c).unwrap();
            let a_bc = compose(&alg, &a, &compose(&alg, &b, &c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            let id = ClassifiedEndo::identity();
            assert_eq!(compose(&alg, &a, &id).unwrap(), a);
            assert_eq!(compose(&alg, &id, &a).unwrap(), a);
        }
    }
}

#[test]
fn two_swaps_compose_to_straight() {
    let alg = DownUp::new(Case::One);
    let mut rng = StdRng::seed_from_u64(14);
    let a = sample::endo(&mut rng, Case::One, EndoKind::Swap, 0);
    let b = sample::endo(&mut rng, Case::One, EndoKind::Swap, 0);
    assert_eq!(compose(&alg, &a, &b).unwrap().kind, EndoKind::Straight);
}

#[test]
fn inverses_are_two_sided() {
    let mut rng = StdRng::seed_from_u64(15);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..30 {
            let m = random_endo(&mut rng, case);
            let phi = invert(&alg, &m).unwrap();
            assert_eq!(compose(&alg, &m, &phi).unwrap(), ClassifiedEndo::identity());
            assert_eq!(compose(&alg, &phi, &m).unwrap(), ClassifiedEndo::identity());
        }
    }
}

#[test]
fn reference_straight_inverse_matches_solver() {
    let alg = DownUp::new(Case::One);
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..30 {
        let m = sample::endo(&mut rng, Case::One, EndoKind::Straight, 0);
        assert_eq!(reference_inverse(&alg, &m), invert(&alg, &m).unwrap());
    }
}

#[test]
fn twist_decides_invertibility_in_second_case() {
    let alg = DownUp::new(Case::Two);
    let mut rng = StdRng::seed_from_u64(17);
    for e in -3..=3 {
        for kind in KINDS {
            let m = sample::endo(&mut rng, Case::Two, kind, e);
            match invert(&alg, &m) {
                Ok(_) => assert!(e == 0 || e == -1),
                Err(Error::NotAutomorphism { center_exponent }) => {
                    assert!(e != 0 && e != -1);
                    assert_eq!(center_exponent.abs(), (2 * e + 1).abs());
                }
                Err(other) => panic!("unexpected {other}"),
            }
        }
    }
}

#[test]
fn apply_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(18);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..30 {
            let m = random_endo(&mut rng, case);
            let a = sample::element(&mut rng, case, 2, 2);
            let b = sample::element(&mut rng, case, 2, 2);
            assert_eq!(
                apply(&alg, &m, &alg.mul(&a, &b)),
                alg.mul(&apply(&alg, &m, &a), &apply(&alg, &m, &b))
            );
        }
    }
}

#[test]
fn monomial_grid_classification() {
    let alg = DownUp::new(Case::One);
    let coeffs = [Scalar::one(), alg.r().clone()];
    let mut words = Vec::new();
    for i in -1..=1 {
        for j in -1..=1 {
            for m in -1..=1 {
                words.push(BasisWord::new(i, j, m));
            }
        }
    }
    for wd in &words {
        for wu in &words {
            for c in &coeffs {
                let g = GenImages::new(Element::term(c.clone(), *wd), Element::word(*wu));
                let expected = match (wd.m, wu.m) {
                    (1, -1) => wd.i + wu.i == 0 && wd.j + wu.j == 0,
                    (-1, 1) => wd.i + wu.i == -1 && wd.j + wu.j == -1,
                    _ => false,
                };
                assert_eq!(check_endo(&alg, &g, true), expected, "{wd} {wu}");
                assert_eq!(classify(&alg, &g).is_ok(), expected);
            }
        }
    }
}
