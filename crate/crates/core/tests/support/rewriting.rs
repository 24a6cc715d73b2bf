//! Naive normal-form oracle: rewrites words in the letters `x, y, d, u`
//! with the defining commutation rules until every word is a PBW word.
//! Shares nothing with the generalized Weyl algebra multiplication.

use std::collections::BTreeMap;

use downup_core::{BasisWord, Case, Element, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
    D,
    U,
}

type Rhs = Vec<(Scalar, Vec<Letter>)>;

fn rule(case: Case, a: Letter, b: Letter) -> Option<Rhs> {
    use Letter::*;
    let r = case.r();
    let s = case.s();
    let inv = (&s - &r).inv().unwrap();
    Some(match (a, b) {
        (Y, X) => vec![(Scalar::one(), vec![X, Y])],
        (D, X) => vec![(s, vec![X, D])],
        (D, Y) => vec![(r, vec![Y, D])],
        (U, X) => vec![(s.inv().unwrap(), vec![X, U])],
        (U, Y) => vec![(r.inv().unwrap(), vec![Y, U])],
        // x - y = (s - r) ud
        (U, D) => vec![(inv.clone(), vec![X]), (-&inv, vec![Y])],
        // s x - r y = (s - r) du
        (D, U) => vec![(&s * &inv, vec![X]), (-(&r * &inv), vec![Y])],
        _ => return None,
    })
}

fn to_word(w: &[Letter]) -> BasisWord {
    let count = |l: Letter| w.iter().filter(|&&c| c == l).count() as i64;
    BasisWord::new(
        count(Letter::X),
        count(Letter::Y),
        count(Letter::D) - count(Letter::U),
    )
}

/// Normal form of a single word in the letters.
pub fn normalize(case: Case, word: &[Letter]) -> Element {
    let mut pending: BTreeMap<Vec<Letter>, Scalar> = BTreeMap::new();
    pending.insert(word.to_vec(), Scalar::one());
    let mut done = Element::zero();
    while !pending.is_empty() {
        let mut next: BTreeMap<Vec<Letter>, Scalar> = BTreeMap::new();
        for (w, c) in pending {
            let hit = (0..w.len().saturating_sub(1))
                .find_map(|p| rule(case, w[p], w[p + 1]).map(|rhs| (p, rhs)));
            match hit {
                None => done.add_term(to_word(&w), c),
                Some((p, rhs)) => {
                    for (k, repl) in rhs {
                        let mut nw = w[..p].to_vec();
                        nw.extend_from_slice(&repl);
                        nw.extend_from_slice(&w[p + 2..]);
                        let slot = next.entry(nw).or_insert_with(Scalar::zero);
                        *slot = &*slot + &(&c * &k);
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        pending = next;
    }
    done
}

pub fn d_pow_u_pow(k: usize, l: usize) -> Vec<Letter> {
    let mut w = vec![Letter::D; k];
    w.extend(std::iter::repeat_n(Letter::U, l));
    w
}

pub fn u_pow_d_pow(l: usize, k: usize) -> Vec<Letter> {
    let mut w = vec![Letter::U; l];
    w.extend(std::iter::repeat_n(Letter::D, k));
    w
}
