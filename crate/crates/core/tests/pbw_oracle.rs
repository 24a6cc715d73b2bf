mod support;

use downup_core::{Case, DownUp, Element};
use support::rewriting::{d_pow_u_pow, normalize, u_pow_d_pow, Letter};

#[test]
fn gwa_products_match_rewriting() {
    for case in [Case::One, Case::Two] {
        let alg = DownUp::new(case);
        for k in 0..=4u32 {
            for l in 0..=4u32 {
                let dk = alg.pow(&Element::d(), k);
                let ul = alg.pow(&Element::u(), l);
                assert_eq!(
                    alg.mul(&dk, &ul),
                    normalize(case, &d_pow_u_pow(k as usize, l as usize)),
                    "d^{k} u^{l}"
                );
                assert_eq!(
                    alg.mul(&ul, &dk),
                    normalize(case, &u_pow_d_pow(l as usize, k as usize)),
                    "u^{l} d^{k}"
                );
            }
        }
    }
}

#[test]
fn d_squared_u_matches_rewriting() {
    let case = Case::One;
    let alg = DownUp::new(case);
    let got = alg.mul(&alg.mul(&Element::d(), &Element::d()), &Element::u());
    let oracle = normalize(case, &[Letter::D, Letter::D, Letter::U]);
    assert_eq!(got, oracle);
    assert_eq!(got, alg.mul(&alg.gwa_a(2), &Element::d()));
}
