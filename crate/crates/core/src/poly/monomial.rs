use std::cmp::Ordering;
use std::fmt;

/// Maximum number of ring variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 8;

/// Largest exponent (and total degree) representable in a packed monomial.
pub const MAX_EXPONENT: u32 = 0x7fff;

const WIDTH: u32 = 16;
const FIELD_MASK: u128 = 0xffff;
const HIGH_BITS: u128 = 0x8000_8000_8000_8000_8000_8000_8000_8000;
const ONES: u128 = 0x0001_0001_0001_0001_0001_0001_0001_0001;

/// Exponent vector packed into 16-bit fields.
///
/// Variable `i` lives in the field at bit offset `16 * (7 - i)`, so variable
/// 0 is most significant and plain integer comparison is lex order.  Every
/// field stays below `0x8000`, which keeps multiplication a single add and
/// divisibility a borrow-free subtraction.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Monomial(u128);

#[inline]
fn offset(i: usize) -> u32 {
    WIDTH * (MAX_VARS as u32 - 1 - i as u32)
}

#[inline]
fn packed_degree(x: u128) -> u32 {
    (x.wrapping_mul(ONES) >> 112) as u32
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// Panics if more than [`MAX_VARS`] exponents are given or the total
    /// degree exceeds [`MAX_EXPONENT`].
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let total: u64 = exps.iter().map(|&e| e as u64).sum();
        assert!(total <= MAX_EXPONENT as u64, "monomial degree overflow");
        let mut bits = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            bits |= (e as u128) << offset(i);
        }
        Monomial(bits)
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        Monomial(1u128 << offset(i))
    }

    #[inline]
    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> offset(i)) & FIELD_MASK) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn degree(self) -> u32 {
        packed_degree(self.0)
    }

    /// Caller guarantees `degree(self) + degree(other) <= MAX_EXPONENT`.
    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0 - other.0))
        } else {
            None
        }
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let mut bits = 0u128;
        for i in 0..MAX_VARS {
            let s = offset(i);
            let a = (self.0 >> s) & FIELD_MASK;
            let b = (other.0 >> s) & FIELD_MASK;
            bits |= a.max(b) << s;
        }
        Monomial(bits)
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut bits = 0u128;
        for i in 0..MAX_VARS {
            let s = offset(i);
            let a = (self.0 >> s) & FIELD_MASK;
            let b = (other.0 >> s) & FIELD_MASK;
            bits |= a.min(b) << s;
        }
        Monomial(bits)
    }

    #[inline]
    pub fn is_coprime(self, other: Monomial) -> bool {
        self.gcd(other) == Monomial::ONE
    }

    /// Renumbers variable `i` to `i + k`.
    pub(crate) fn shift_right(self, k: usize) -> Monomial {
        Monomial(self.0 >> (WIDTH * k as u32))
    }

    /// Drops the first `k` variables (which must carry zero exponent).
    pub(crate) fn shift_left(self, k: usize) -> Monomial {
        debug_assert!((0..k).all(|i| self.exponent(i) == 0));
        Monomial(self.0 << (WIDTH * k as u32))
    }

    /// Whether any of the first `k` variables occurs.
    pub(crate) fn involves_front(self, k: usize) -> bool {
        (0..k).any(|i| self.exponent(i) != 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exponent(i) != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", self.exponents(last))
    }
}

/// A term order on monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    /// Eliminates the first `k` variables; graded reverse lex inside each block.
    BlockElim(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: Monomial, b: Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a.0, b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::BlockElim(k) => {
                let front = if k == 0 {
                    0
                } else if k >= MAX_VARS {
                    !0u128
                } else {
                    !0u128 << (128 - WIDTH * k as u32)
                };
                grevlex(a.0 & front, b.0 & front)
                    .then_with(|| grevlex(a.0 & !front, b.0 & !front))
            }
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex | MonomialOrder::BlockElim(0))
    }
}

#[inline]
fn grevlex(a: u128, b: u128) -> Ordering {
    let (da, db) = (packed_degree(a), packed_degree(b));
    if da != db {
        return da.cmp(&db);
    }
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    // lowest differing field = highest-index variable that differs
    let s = (diff.trailing_zeros() / WIDTH) * WIDTH;
    let ea = (a >> s) & FIELD_MASK;
    let eb = (b >> s) & FIELD_MASK;
    eb.cmp(&ea)
}
