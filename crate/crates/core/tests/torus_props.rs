use downup_core::torus::{QuantumTorus, TorusElement, TorusGen, TorusMono};
use downup_core::{sample, Case, Element};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn embed_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(3);
    for case in [Case::One, Case::Two] {
        let tq = QuantumTorus::new(case);
        let alg = tq.algebra();
        for _ in 0..100 {
            let e = sample::element(&mut rng, case, 3, 3);
            let f = sample::element(&mut rng, case, 3, 3);
            assert_eq!(
                tq.embed(&alg.mul(&e, &f)),
                tq.mul(&tq.embed(&e), &tq.embed(&f))
            );
        }
    }
}

#[test]
fn preimage_round_trips() {
    let mut rng = StdRng::seed_from_u64(5);
    for case in [Case::One, Case::Two] {
        let tq = QuantumTorus::new(case);
        for _ in 0..100 {
            let e = sample::element(&mut rng, case, 4, 3);
            let t = tq.embed(&e);
            let back = tq.preimage(&t).unwrap();
            assert_eq!(back, e);
            assert_eq!(tq.embed(&back), t);
        }
    }
}

#[test]
fn u_embedding_inverts() {
    let tq = QuantumTorus::new(Case::One);
    let u = tq.embed(&Element::u());
    assert_eq!(
        tq.mul(&u, &TorusElement::gen(TorusGen::T1)),
        tq.embed(&tq.algebra().gwa_a(0))
    );
}

#[test]
fn non_image_elements_are_rejected() {
    let tq = QuantumTorus::new(Case::Two);
    // T2 T1^-1 alone is not a multiple of the u factor
    let t = TorusElement::mono(TorusMono::new(-1, 1, 0));
    assert!(tq.preimage(&t).is_err());
    let t = TorusElement::mono(TorusMono::new(-2, 3, -1));
    assert!(tq.preimage(&t).is_err());
}

#[test]
fn centrality_matches_brute_force_commutation() {
    for case in [Case::One, Case::Two] {
        let tq = QuantumTorus::new(case);
        for a in -4..=4 {
            for b in -4..=4 {
                for c in -4..=4 {
                    let t = TorusElement::mono(TorusMono::new(a, b, c));
                    let brute = TorusGen::ALL.iter().all(|&g| {
                        let g = TorusElement::gen(g);
                        tq.mul(&t, &g) == tq.mul(&g, &t)
                    });
                    assert_eq!(tq.is_central(&t), brute, "{t}");
                    let expected = match case {
                        Case::One => (a, b, c) == (0, 0, 0),
                        Case::Two => a == 0 && b == c,
                    };
                    assert_eq!(brute, expected);
                }
            }
        }
    }
}
