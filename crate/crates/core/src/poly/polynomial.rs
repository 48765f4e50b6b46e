use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::accum::Accumulator;
use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use super::terms::{self, Term};
use super::{check_degree, parse};
use crate::error::{Error, Result};
use crate::field::{inv_mod, mul_mod, FieldElement};

/// A sparse polynomial: nonzero terms sorted descending in the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        Polynomial::monomial(ring, Monomial::ONE, ring.field().elem(c))
    }

    /// The `i`-th ring variable. Panics if `i` is out of range.
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Polynomial::monomial(ring, Monomial::var(i), FieldElement::ONE)
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        ring.var_index(name)
            .map(|i| Polynomial::var(ring, i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: FieldElement) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds from unordered terms; duplicates are combined.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let p = ring.field().modulus();
        Polynomial { ring: ring.clone(), terms: terms::normalize(terms, p, ring.order()) }
    }

    /// Terms must already be canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(w[0].0, w[1].0).is_gt()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Self> {
        parse::parse(text, ring)
    }

    /// Canonical text form, inverse to [`Polynomial::parse`].
    pub fn render(&self) -> String {
        parse::render(self)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0 == Monomial::ONE)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.0.degree();
                self.terms.iter().all(|s| s.0.degree() == d)
            }
        }
    }

    pub fn leading_term(&self) -> Option<(Monomial, FieldElement)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.terms.first().map(|t| t.1)
    }

    pub fn coefficient(&self, m: Monomial) -> FieldElement {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|t| order.cmp(m, t.0))
            .map_or(FieldElement::ZERO, |i| self.terms[i].1)
    }

    fn p(&self) -> u32 {
        self.ring.field().modulus()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let t = terms::add(&self.terms, &other.terms, self.p(), self.ring.order());
        Ok(Polynomial::from_sorted(&self.ring, t))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let t = terms::sub(&self.terms, &other.terms, self.p(), self.ring.order());
        Ok(Polynomial::from_sorted(&self.ring, t))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            check_degree(a + b)?;
        }
        let t = terms::mul(&self.terms, &other.terms, self.p(), self.ring.order());
        Ok(Polynomial::from_sorted(&self.ring, t))
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        Polynomial::from_sorted(&self.ring, terms::scale(&self.terms, c.0, self.p()))
    }

    pub fn mul_monomial(&self, m: Monomial, c: FieldElement) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            check_degree(d + m.degree())?;
        }
        Ok(Polynomial::from_sorted(&self.ring, terms::mul_term(&self.terms, m, c.0, self.p())))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            check_degree(d.saturating_mul(e))?;
        }
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c == FieldElement::ONE => self.clone(),
            Some(c) => self.scale(FieldElement(inv_mod(c.0, self.p()))),
        }
    }

    /// The exact quotient `self / divisor`; errors unless the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.same_ring(divisor)?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::NotDivisible);
        };
        let p = self.p();
        let order = self.ring.order();
        if divisor.len() == 1 {
            let inv = inv_mod(lc.0, p);
            let mut q = Vec::with_capacity(self.len());
            for &(m, c) in &self.terms {
                let qm = m.div(lm).ok_or(Error::NotDivisible)?;
                q.push((qm, FieldElement(mul_mod(c.0, inv, p))));
            }
            return Ok(Polynomial::from_sorted(&self.ring, q));
        }
        let inv = inv_mod(lc.0, p);
        let tail = &divisor.terms[1..];
        let mut acc = Accumulator::from_terms(&self.terms, p, order);
        let mut q = Vec::new();
        while let Some((m, c)) = acc.pop_lead() {
            let qm = m.div(lm).ok_or(Error::NotDivisible)?;
            let qc = mul_mod(c, inv, p);
            q.push((qm, FieldElement(qc)));
            acc.sub_mul(qc, qm, tail);
        }
        Ok(Polynomial::from_sorted(&self.ring, q))
    }

    /// Re-expresses in a ring with the same variables and field but possibly another order.
    pub fn to_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let mut t = self.terms.clone();
        if ring.order() != self.ring.order() {
            let order: MonomialOrder = ring.order();
            t.sort_unstable_by(|a, b| order.cmp(b.0, a.0));
        }
        Ok(Polynomial::from_sorted(ring, t))
    }

    /// Moves into `ring`, which has the variables of `self` preceded by `k` new ones.
    pub(crate) fn embed_after(&self, ring: &Arc<Ring>, k: usize) -> Polynomial {
        debug_assert_eq!(ring.nvars(), self.ring.nvars() + k);
        let order = ring.order();
        let mut t: Vec<Term> = self.terms.iter().map(|&(m, c)| (m.shift_right(k), c)).collect();
        t.sort_unstable_by(|a, b| order.cmp(b.0, a.0));
        Polynomial::from_sorted(ring, t)
    }

    /// Inverse of [`Polynomial::embed_after`]; `None` if a front variable occurs.
    pub(crate) fn drop_front(&self, ring: &Arc<Ring>, k: usize) -> Option<Polynomial> {
        if self.terms.iter().any(|t| t.0.involves_front(k)) {
            return None;
        }
        let order = ring.order();
        let mut t: Vec<Term> = self.terms.iter().map(|&(m, c)| (m.shift_left(k), c)).collect();
        t.sort_unstable_by(|a, b| order.cmp(b.0, a.0));
        Some(Polynomial::from_sorted(ring, t))
    }

}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other).is_ok() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

// Operator forms panic on ring mismatch or degree-cap overflow; use the
// `checked_*` methods where that matters.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let p = self.p();
        Polynomial::from_sorted(&self.ring, terms::scale(&self.terms, p - 1, p))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn ring() -> Arc<Ring> {
        Ring::xyz(PrimeField::new(10009, 3).unwrap())
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s, &ring()).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        let r = ring();
        let f = poly("y^3 - z^3");
        assert!((&f * &Polynomial::zero(&r)).is_zero());
        assert_eq!(poly("x - y") * poly("x + y"), poly("x^2 - y^2"));
        let g = poly("z^3 - x^3");
        let h = poly("x^3 - y^3");
        assert!((&f + &g + &h).is_zero());
        assert_eq!((&f * &g).degree(), Some(6));
    }

    #[test]
    fn exact_division() {
        assert_eq!(poly("x^2 - y^2").exact_div(&poly("x - y")).unwrap(), poly("x + y"));
        let (f, g, h) = (poly("y^3 - z^3"), poly("z^3 - x^3"), poly("x^3 - y^3"));
        assert_eq!((&f * &g * &h).exact_div(&f).unwrap(), &g * &h);
        assert_eq!(poly("x^2").exact_div(&poly("y")), Err(Error::NotDivisible));
        assert_eq!(poly("x^2 + 1").exact_div(&poly("x + 1")), Err(Error::NotDivisible));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let other = Ring::new(["x", "y"], PrimeField::new(10009, 3).unwrap(), MonomialOrder::GrevLex)
            .unwrap();
        let a = Polynomial::var(&other, 0);
        assert_eq!(a.checked_add(&poly("x")), Err(Error::RingMismatch));
    }

    #[test]
    fn degree_cap_guard() {
        let err = poly("x").pow(1000).unwrap_err();
        assert!(matches!(err, Error::DegreeCap { degree: 1000, .. }));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), 0i64..10009), 0..6).prop_map(|ts| {
            let r = ring();
            let f = *r.field();
            Polynomial::from_terms(
                &r,
                ts.into_iter().map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), f.elem(k))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(-(-a.clone()), a.clone());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn multiplication_adds_degrees(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }
}
