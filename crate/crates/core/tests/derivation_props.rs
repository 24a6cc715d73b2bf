use downup_core::derivation::{
    apply_deriv, base_derivation, check_deriv, decompose, hh1_coords, inner, Base, CenterElement,
    DerivSpec,
};
use downup_core::{sample, Case, DownUp, Element, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_center(rng: &mut StdRng, case: Case) -> CenterElement {
    match case {
        Case::One => {
            if rng.gen_bool(0.2) {
                CenterElement::zero()
            } else {
                CenterElement::constant(sample::scalar(rng, case))
            }
        }
        Case::Two => CenterElement::from_element(&sample::z_laurent(rng, case, 2)).unwrap(),
    }
}

fn assemble(alg: &DownUp, t: &Element, mu1: &CenterElement, mu2: &CenterElement) -> DerivSpec {
    inner(alg, t)
        .add(&base_derivation(Base::D1).scale_central(alg, mu1))
        .add(&base_derivation(Base::D2).scale_central(alg, mu2))
}

#[test]
fn reconstruction_recovers_mu_and_inner_part() {
    let mut rng = StdRng::seed_from_u64(21);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..20 {
            let t = sample::element(&mut rng, case, 4, 3);
            let mu1 = random_center(&mut rng, case);
            let mu2 = random_center(&mut rng, case);
            let s = assemble(&alg, &t, &mu1, &mu2);
            assert!(check_deriv(&alg, &s));
            let dec = decompose(&alg, &s).unwrap();
            assert_eq!(dec.mu1, mu1);
            assert_eq!(dec.mu2, mu2);
            assert_eq!(inner(&alg, &dec.t), inner(&alg, &t));
        }
    }
}

#[test]
fn inner_derivations_have_zero_class() {
    let mut rng = StdRng::seed_from_u64(22);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..10 {
            let t = sample::element(&mut rng, case, 4, 3);
            let (m1, m2) = hh1_coords(&alg, &inner(&alg, &t)).unwrap();
            assert!(m1.is_zero() && m2.is_zero());
        }
        let one = CenterElement::constant(Scalar::one());
        assert_eq!(
            hh1_coords(&alg, &base_derivation(Base::D1)).unwrap(),
            (one.clone(), CenterElement::zero())
        );
        assert_eq!(
            hh1_coords(&alg, &base_derivation(Base::D2)).unwrap(),
            (CenterElement::zero(), one)
        );
        let zero = decompose(&alg, &DerivSpec::zero()).unwrap();
        assert!(zero.t.is_zero() && zero.mu1.is_zero() && zero.mu2.is_zero());
    }
}

#[test]
fn d1_plus_inner_x() {
    let alg = DownUp::new(Case::One);
    let s = base_derivation(Base::D1).add(&inner(&alg, &Element::x()));
    assert_eq!(
        hh1_coords(&alg, &s).unwrap(),
        (
            CenterElement::constant(Scalar::one()),
            CenterElement::zero()
        )
    );
}

#[test]
fn leibniz_rule_on_products() {
    let mut rng = StdRng::seed_from_u64(23);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..10 {
            let t = sample::element(&mut rng, case, 2, 2);
            let s = base_derivation(Base::D2).add(&inner(&alg, &t));
            for _ in 0..5 {
                let a = sample::element(&mut rng, case, 3, 3);
                let b = sample::element(&mut rng, case, 3, 3);
                let lhs = apply_deriv(&alg, &s, &alg.mul(&a, &b));
                let rhs = &alg.mul(&apply_deriv(&alg, &s, &a), &b)
                    + &alg.mul(&a, &apply_deriv(&alg, &s, &b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn decomposition_is_linear() {
    let mut rng = StdRng::seed_from_u64(24);
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for _ in 0..5 {
            let s1 = assemble(
                &alg,
                &sample::element(&mut rng, case, 3, 2),
                &random_center(&mut rng, case),
                &random_center(&mut rng, case),
            );
            let s2 = assemble(
                &alg,
                &sample::element(&mut rng, case, 3, 2),
                &random_center(&mut rng, case),
                &random_center(&mut rng, case),
            );
            let (a, b) = (
                sample::scalar(&mut rng, case),
                sample::scalar(&mut rng, case),
            );
            let (p1, p2) = hh1_coords(&alg, &s1).unwrap();
            let (q1, q2) = hh1_coords(&alg, &s2).unwrap();
            let (c1, c2) = hh1_coords(&alg, &s1.scale(&a).add(&s2.scale(&b))).unwrap();
            assert_eq!(c1, p1.scale(&a).add(&q1.scale(&b)));
            assert_eq!(c2, p2.scale(&a).add(&q2.scale(&b)));
        }
    }
}

#[test]
fn non_derivations_are_rejected() {
    let alg = DownUp::new(Case::One);
    let bad = DerivSpec::new(Element::u(), Element::zero());
    assert!(!check_deriv(&alg, &bad));
    assert!(decompose(&alg, &bad).is_err());
}
