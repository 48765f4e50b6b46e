use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use super::monomial::{Monomial, MonomialOrder};
use super::terms::Term;
use crate::field::{add_mod, mul_mod, sub_mod, FieldElement};

#[derive(Clone, Copy, PartialEq, Eq)]
struct Key {
    m: Monomial,
    order: MonomialOrder,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(self.m, other.m)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial under construction, popped from the leading term down.
///
/// Cancelled monomials linger in the heap with coefficient zero and are
/// skipped when popped.
pub(crate) struct Accumulator {
    p: u32,
    order: MonomialOrder,
    coeffs: FxHashMap<Monomial, u32>,
    heap: BinaryHeap<Key>,
}

impl Accumulator {
    pub(crate) fn new(p: u32, order: MonomialOrder) -> Self {
        Accumulator { p, order, coeffs: FxHashMap::default(), heap: BinaryHeap::new() }
    }

    pub(crate) fn from_terms(terms: &[Term], p: u32, order: MonomialOrder) -> Self {
        let mut acc = Accumulator::new(p, order);
        acc.coeffs.reserve(terms.len());
        for &(m, c) in terms {
            acc.coeffs.insert(m, c.0);
        }
        acc.heap = terms.iter().map(|&(m, _)| Key { m, order }).collect();
        acc
    }

    #[inline]
    pub(crate) fn add_term(&mut self, m: Monomial, c: u32) {
        match self.coeffs.entry(m) {
            Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v = add_mod(*v, c, self.p);
            }
            Entry::Vacant(e) => {
                e.insert(c);
                self.heap.push(Key { m, order: self.order });
            }
        }
    }

    /// Adds `-c * m * poly`.
    pub(crate) fn sub_mul(&mut self, c: u32, m: Monomial, poly: &[Term]) {
        let neg = sub_mod(0, c, self.p);
        for &(pm, pc) in poly {
            self.add_term(pm.mul(m), mul_mod(neg, pc.0, self.p));
        }
    }

    /// Removes and returns the leading nonzero term.
    pub(crate) fn pop_lead(&mut self) -> Option<(Monomial, u32)> {
        while let Some(k) = self.heap.pop() {
            let c = self.coeffs.remove(&k.m).unwrap_or(0);
            if c != 0 {
                return Some((k.m, c));
            }
        }
        None
    }

    pub(crate) fn into_sorted(mut self) -> Vec<Term> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        while let Some((m, c)) = self.pop_lead() {
            out.push((m, FieldElement(c)));
        }
        out
    }
}
