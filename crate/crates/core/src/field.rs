//! Prime-field arithmetic for the coefficient field.
//!
//! The Fermat machinery needs a field with `n` distinct `n`-th roots of
//! unity, so a [`PrimeField`] always records the parameter `n` it was chosen
//! for and guarantees `p ≡ 1 (mod n)`.

use std::fmt;

use crate::error::{Error, Result};

/// Default lower bound for automatic prime selection.
pub const DEFAULT_PRIME_FLOOR: u32 = 10_000;

/// A canonical residue in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field `F_p`, chosen for a Fermat parameter `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
    n: u32,
}

impl PrimeField {
    /// Builds `F_p`, rejecting moduli that are not prime or not `1 mod n`.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("n must be positive".into()));
        }
        if p > (1 << 31) {
            return Err(Error::Field(format!("modulus {p} exceeds 2^31")));
        }
        if !is_prime(p as u64) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        if !(p - 1).is_multiple_of(n) {
            return Err(Error::Field(format!("{p} is not congruent to 1 mod {n}")));
        }
        Ok(PrimeField { p, n })
    }

    /// The smallest admissible field at or above [`DEFAULT_PRIME_FLOOR`].
    pub fn auto(n: u32) -> Result<Self> {
        PrimeField::new(choose_prime(n, DEFAULT_PRIME_FLOOR)?, n)
    }

    /// The next admissible prime above this one, for the same `n`.
    pub fn next_admissible(&self) -> Result<Self> {
        PrimeField::new(choose_prime(self.n, self.p + 1)?, self.n)
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(add_mod(a.0, b.0, self.p))
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(sub_mod(a.0, b.0, self.p))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(mul_mod(a.0, b.0, self.p))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        FieldElement(pow_mod(a.0, e, self.p))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            None
        } else {
            Some(FieldElement(inv_mod(a.0, self.p)))
        }
    }

    /// The `n` distinct `n`-th roots of unity, sorted ascending.
    pub fn nth_roots(&self) -> Result<Vec<FieldElement>> {
        nth_roots(self.p, self.n).map(|v| v.into_iter().map(FieldElement).collect())
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a != 0);
    pow_mod(a, (p - 2) as u64, p)
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, a);
            }
            a = mulm(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `p >= floor` with `p ≡ 1 (mod n)`.
pub fn choose_prime(n: u32, floor: u32) -> Result<u32> {
    if n < 2 {
        return Err(Error::Parameter(format!("n = {n} must be at least 2")));
    }
    let mut p = floor.max(2) as u64;
    // first candidate in the residue class 1 mod n
    let r = (p + n as u64 - 1) % n as u64;
    if r != 0 {
        p += n as u64 - r;
    }
    while p <= (1u64 << 31) {
        if is_prime(p) {
            return Ok(p as u32);
        }
        p += n as u64;
    }
    Err(Error::Field(format!("no admissible prime for n = {n} below 2^31")))
}

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn nth_roots(p: u32, n: u32) -> Result<Vec<u32>> {
    if n == 0 || p < 2 || !(p - 1).is_multiple_of(n) {
        return Err(Error::Field(format!(
            "F_{p} has no {n} distinct {n}-th roots of unity"
        )));
    }
    // a primitive n-th root is g^((p-1)/n) for a generator g of F_p^*
    let factors = prime_factors(p - 1);
    let generator = (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, ((p - 1) / q) as u64, p) != 1))
        .ok_or_else(|| Error::Field(format!("F_{p} has no generator")))?;
    let zeta = pow_mod(generator, ((p - 1) / n) as u64, p);
    let mut roots: Vec<u32> = (0..n).map(|i| pow_mod(zeta, i as u64, p)).collect();
    roots.sort_unstable();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    fn sweep(n: u32, floor: u32) -> u32 {
        (floor.max(2)..)
            .find(|&p| trial_division(p as u64) && p % n == 1 % n)
            .unwrap()
    }

    #[test]
    fn primality_matches_trial_division() {
        for k in 0..20_000u64 {
            assert_eq!(is_prime(k), trial_division(k), "{k}");
        }
    }

    #[test]
    fn choose_prime_examples() {
        assert_eq!(choose_prime(3, 2).unwrap(), 7);
        assert_eq!(choose_prime(2, 2).unwrap(), 3);
        assert_eq!(choose_prime(3, 10_000).unwrap(), sweep(3, 10_000));
        assert_eq!(choose_prime(3, 10_000).unwrap(), 10_009);
        for n in 2..=8 {
            for floor in [2, 100, 10_000, 10_010] {
                assert_eq!(choose_prime(n, floor).unwrap(), sweep(n, floor));
            }
        }
        assert!(choose_prime(1, 10).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let f13 = PrimeField::new(13, 3).unwrap();
        let r: Vec<u32> = f13.nth_roots().unwrap().iter().map(|e| e.value()).collect();
        assert_eq!(r, vec![1, 3, 9]);
        let f7 = PrimeField::new(7, 3).unwrap();
        let r: Vec<u32> = f7.nth_roots().unwrap().iter().map(|e| e.value()).collect();
        assert_eq!(r, vec![1, 2, 4]);
        assert!(PrimeField::new(5, 3).is_err());
        assert!(nth_roots(5, 3).is_err());
    }

    #[test]
    fn roots_are_distinct_nth_roots() {
        for n in 2..=6 {
            let f = PrimeField::auto(n).unwrap();
            let roots = f.nth_roots().unwrap();
            assert_eq!(roots.len(), n as usize);
            assert!(roots.contains(&FieldElement::ONE));
            for w in roots.windows(2) {
                assert_ne!(w[0], w[1]);
            }
            for r in &roots {
                assert_eq!(f.pow(*r, n as u64), FieldElement::ONE);
            }
            // one of them has exact order n
            assert!(roots
                .iter()
                .any(|r| (1..n).all(|m| f.pow(*r, m as u64) != FieldElement::ONE)));
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(PrimeField::new(15, 2).is_err());
        assert!(PrimeField::new(10_007, 3).is_err());
        let f = PrimeField::auto(4).unwrap();
        assert_eq!(f.modulus() % 4, 1);
        let g = f.next_admissible().unwrap();
        assert!(g.modulus() > f.modulus());
        assert_eq!(g.modulus() % 4, 1);
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u32..10_009, b in 0u32..10_009, c in 0u32..10_009) {
            let f = PrimeField::new(10_009, 3).unwrap();
            let (a, b, c) = (FieldElement(a), FieldElement(b), FieldElement(c));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
            prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            if let Some(ai) = f.inv(a) {
                prop_assert_eq!(f.mul(a, ai), FieldElement::ONE);
            } else {
                prop_assert!(a.is_zero());
            }
        }
    }
}
