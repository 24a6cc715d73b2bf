//! Sparse row echelon form over `K` with algebra elements as vectors.

use std::collections::BTreeMap;

use crate::pbw::{BasisWord, Element};

/// The `K`-span of a set of elements, kept in echelon form keyed by each
/// basis vector's largest word (its pivot, normalized to coefficient one).
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: BTreeMap<BasisWord, Element>,
}

impl Span {
    pub fn new() -> Span {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// What is left of `e` after eliminating every pivot; zero iff `e` is in the span.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut work = e.clone();
        let mut residual = Element::zero();
        while let Some((w, c)) = work.leading() {
            match self.rows.get(&w) {
                Some(row) => work = &work - &row.scale(&c),
                None => {
                    residual.add_term(w, c.clone());
                    work.add_term(w, -c);
                }
            }
        }
        residual
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.reduce(e).is_zero()
    }

    /// Inserts `e`; returns false when it was already in the span.
    pub fn insert(&mut self, e: &Element) -> bool {
        let res = self.reduce(e);
        let Some((w, c)) = res.leading() else {
            return false;
        };
        let row = res.scale(&c.inv().expect("nonzero pivot"));
        self.rows.insert(w, row);
        true
    }
}
