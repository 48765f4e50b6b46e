//! Arithmetic on raw term slices sorted descending in a given order.

use std::cmp::Ordering;

use rustc_hash::FxHashMap;

use super::monomial::{Monomial, MonomialOrder};
use crate::field::{add_mod, mul_mod, sub_mod, FieldElement};

pub(crate) type Term = (Monomial, FieldElement);

pub(crate) fn add(a: &[Term], b: &[Term], p: u32, order: MonomialOrder) -> Vec<Term> {
    merge(a, b, p, order, false)
}

pub(crate) fn sub(a: &[Term], b: &[Term], p: u32, order: MonomialOrder) -> Vec<Term> {
    merge(a, b, p, order, true)
}

fn merge(a: &[Term], b: &[Term], p: u32, order: MonomialOrder, negate: bool) -> Vec<Term> {
    let neg = |c: u32| if negate { sub_mod(0, c, p) } else { c };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(a[i].0, b[j].0) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, FieldElement(neg(b[j].1 .0))));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate {
                    sub_mod(a[i].1 .0, b[j].1 .0, p)
                } else {
                    add_mod(a[i].1 .0, b[j].1 .0, p)
                };
                if c != 0 {
                    out.push((a[i].0, FieldElement(c)));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(m, c)| (m, FieldElement(neg(c.0)))));
    out
}

pub(crate) fn scale(a: &[Term], c: u32, p: u32) -> Vec<Term> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&(m, x)| (m, FieldElement(mul_mod(x.0, c, p)))).collect()
}

/// `c * m * a`; term order is preserved by monomial multiplication.
pub(crate) fn mul_term(a: &[Term], m: Monomial, c: u32, p: u32) -> Vec<Term> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&(am, x)| (am.mul(m), FieldElement(mul_mod(x.0, c, p)))).collect()
}

pub(crate) fn mul(a: &[Term], b: &[Term], p: u32, order: MonomialOrder) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() < b.len() { (a, b) } else { (b, a) };
    if a.len() == 1 {
        return mul_term(b, a[0].0, a[0].1 .0, p);
    }
    let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
    acc.reserve(a.len() * b.len());
    for &(ma, ca) in a {
        for &(mb, cb) in b {
            let e = acc.entry(ma.mul(mb)).or_insert(0);
            *e = add_mod(*e, mul_mod(ca.0, cb.0, p), p);
        }
    }
    collect_sorted(acc, order)
}

pub(crate) fn collect_sorted(acc: FxHashMap<Monomial, u32>, order: MonomialOrder) -> Vec<Term> {
    let mut out: Vec<Term> =
        acc.into_iter().filter(|&(_, c)| c != 0).map(|(m, c)| (m, FieldElement(c))).collect();
    out.sort_unstable_by(|x, y| order.cmp(y.0, x.0));
    out
}

/// Canonicalizes an arbitrary term list: combines duplicates, drops zeros, sorts.
pub(crate) fn normalize(
    terms: impl IntoIterator<Item = Term>,
    p: u32,
    order: MonomialOrder,
) -> Vec<Term> {
    let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
    for (m, c) in terms {
        let e = acc.entry(m).or_insert(0);
        *e = add_mod(*e, c.0 % p, p);
    }
    collect_sorted(acc, order)
}
