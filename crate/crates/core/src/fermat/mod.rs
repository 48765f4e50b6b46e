//! The Fermat configuration `I = (x f, y g, z h)` with
//! `f = y^n - z^n`, `g = z^n - x^n`, `h = x^n - y^n`, and every object
//! built from it: symbolic powers, explicit generator families, block
//! Hilbert–Burch matrices, reductions and predicted resolutions.

mod blocks;
mod predict;
mod syzygy;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

pub use blocks::{block_c, block_h, vector_e};
pub use crate::hilbert::PredictedResolution;
pub use predict::ResolutionKind;

/// The ring, the three pencil forms and the ideal for one `(n, p)`.
pub struct FermatContext {
    n: u32,
    ring: Arc<Ring>,
    f: Polynomial,
    g: Polynomial,
    h: Polynomial,
    ideal: Ideal,
    components: [Ideal; 4],
    intersections: Mutex<HashMap<[u32; 4], Ideal>>,
}

impl std::fmt::Debug for FermatContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FermatContext(n={}, {})", self.n, self.ring.field())
    }
}

/// Generators `a^(t-i) b^i`, `i = 0..=t`, of `(a, b)^t`.
pub(crate) fn pair_power(a: &Polynomial, b: &Polynomial, t: u32) -> Result<Vec<Polynomial>> {
    (0..=t).map(|i| a.pow(t - i)?.checked_mul(&b.pow(i)?)).collect()
}

fn times_all(c: &Polynomial, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    gens.iter().map(|g| c.checked_mul(g)).collect()
}

impl FermatContext {
    /// `n >= 2`; everything past the ideal itself additionally needs `n >= 3`.
    pub fn new(n: u32, field: PrimeField) -> Result<FermatContext> {
        if n < 2 {
            return Err(Error::Parameter(format!("n = {n}; the Fermat ideal needs n >= 2")));
        }
        if !(field.modulus() - 1).is_multiple_of(n) {
            return Err(Error::Field(format!("{} is not congruent to 1 mod {n}", field.modulus())));
        }
        let ring = Ring::xyz(field);
        let v = |i| Polynomial::var(&ring, i);
        let (x, y, z) = (v(0), v(1), v(2));
        let f = y.pow(n)?.checked_sub(&z.pow(n)?)?;
        let g = z.pow(n)?.checked_sub(&x.pow(n)?)?;
        let h = x.pow(n)?.checked_sub(&y.pow(n)?)?;
        if !(&f + &g + &h).is_zero() {
            return Err(Error::Refuted("f + g + h is not zero".into()));
        }
        let ideal = Ideal::new(&ring, vec![&x * &f, &y * &g, &z * &h])?;
        let components = [
            Ideal::new(&ring, vec![f.clone(), g.clone()])?,
            Ideal::new(&ring, vec![x.clone(), y.clone()])?,
            Ideal::new(&ring, vec![y.clone(), z.clone()])?,
            Ideal::new(&ring, vec![z.clone(), x.clone()])?,
        ];
        let ctx = FermatContext {
            n,
            ring,
            f,
            g,
            h,
            ideal,
            components,
            intersections: Mutex::new(HashMap::new()),
        };
        if !ctx.intersection([1, 1, 1, 1])?.equal(&ctx.ideal)? {
            return Err(Error::Refuted("I differs from the intersection of its components".into()));
        }
        Ok(ctx)
    }

    /// Context over the smallest admissible prime.
    pub fn auto(n: u32) -> Result<FermatContext> {
        FermatContext::new(n, PrimeField::auto(n.max(1))?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, i)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// `(f, g)`, `(x, y)`, `(y, z)`, `(z, x)`.
    pub fn components(&self) -> &[Ideal; 4] {
        &self.components
    }

    pub(crate) fn require_plane_curves(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::Parameter(format!("n = {}; this construction needs n >= 3", self.n)));
        }
        Ok(())
    }

    /// `f^a g^b h^c`.
    pub fn fgh_power(&self, a: u32, b: u32, c: u32) -> Result<Polynomial> {
        self.f.pow(a)?.checked_mul(&self.g.pow(b)?)?.checked_mul(&self.h.pow(c)?)
    }

    /// `x^a y^b z^c`.
    pub(crate) fn xyz_power(&self, a: u32, b: u32, c: u32) -> Result<Polynomial> {
        self.var(0).pow(a)?.checked_mul(&self.var(1).pow(b)?)?.checked_mul(&self.var(2).pow(c)?)
    }

    /// `(f,g)^e0 ∩ (x,y)^e1 ∩ (y,z)^e2 ∩ (z,x)^e3`, folded left to right.
    /// Zero exponents contribute the unit ideal.  Results are cached.
    pub fn intersection(&self, exps: [u32; 4]) -> Result<Ideal> {
        if let Some(hit) = self.intersections.lock().expect("cache lock").get(&exps) {
            return Ok(hit.clone());
        }
        let mut acc: Option<Ideal> = None;
        for (comp, &e) in self.components.iter().zip(&exps) {
            if e == 0 {
                continue;
            }
            let p = comp.power(e)?;
            acc = Some(match acc {
                None => p,
                Some(a) => a.intersect(&p)?,
            });
        }
        let out = match acc {
            Some(a) => a,
            None => Ideal::unit(&self.ring),
        };
        out.groebner()?;
        self.intersections.lock().expect("cache lock").entry(exps).or_insert_with(|| out.clone());
        Ok(out)
    }

    /// `I^(m)` as the intersection of the `m`-th powers of the components.
    pub fn symbolic_power(&self, m: u32) -> Result<Ideal> {
        if m == 0 {
            return Err(Error::Parameter("symbolic power of order 0".into()));
        }
        self.intersection([m; 4])
    }

    /// `I^r`.
    pub fn ordinary_power(&self, r: u32) -> Result<Ideal> {
        self.ideal.power(r)
    }

    fn check_k(&self, k: u32) -> Result<()> {
        self.require_plane_curves()?;
        if k == 0 {
            return Err(Error::Parameter("k must be at least 1".into()));
        }
        Ok(())
    }

    /// The generating set of `I^(kn)` as four families, expanded.
    /// There are `k(n-3) + 1 + 3kn` of them.
    pub fn thm_generators(&self, k: u32) -> Result<Vec<Polynomial>> {
        self.check_k(k)?;
        let n = self.n;
        let (x, y, z) = (self.var(0), self.var(1), self.var(2));
        let mut out = times_all(&self.fgh_power(k, k, k)?, &pair_power(&self.f, &self.g, (n - 3) * k)?)?;
        let xy = pair_power(&x, &y, n - 1)?;
        let yz = pair_power(&y, &z, n - 1)?;
        let zx = pair_power(&z, &x, n - 1)?;
        for i in 1..=k {
            let lead = (k - i) * (n - 2) + 2 * i;
            let mid = k + i * (n - 3);
            let c = self.fgh_power(lead, mid, k - i)?.checked_mul(&x.pow((i - 1) * n + 1)?)?;
            out.extend(times_all(&c, &xy)?);
            let c = self.fgh_power(k - i, lead, mid)?.checked_mul(&y.pow((i - 1) * n + 1)?)?;
            out.extend(times_all(&c, &yz)?);
            let c = self.fgh_power(mid, k - i, lead)?.checked_mul(&z.pow((i - 1) * n + 1)?)?;
            out.extend(times_all(&c, &zx)?);
        }
        Ok(out)
    }

    /// The same ideal as a sum of four products involving `(k-1)`-st
    /// powers of two-generated ideals, expanded.
    pub fn compact_generators(&self, k: u32) -> Result<Vec<Polynomial>> {
        self.check_k(k)?;
        let n = self.n;
        let (x, y, z) = (self.var(0), self.var(1), self.var(2));
        let mut out = times_all(&self.fgh_power(k, k, k)?, &pair_power(&self.f, &self.g, (n - 3) * k)?)?;
        let families = [
            (&x, &y, self.fgh_power(2, n - 2, 0)?, self.fgh_power(n - 2, 1, 1)?, self.xyz_power(n, 0, 0)?),
            (&y, &z, self.fgh_power(0, 2, n - 2)?, self.fgh_power(1, n - 2, 1)?, self.xyz_power(0, n, 0)?),
            (&z, &x, self.fgh_power(n - 2, 0, 2)?, self.fgh_power(1, 1, n - 2)?, self.xyz_power(0, 0, n)?),
        ];
        for (a, b, c, first, pure) in families {
            let second = c.checked_mul(&pure)?;
            let scale = a.checked_mul(&c)?;
            let lines = times_all(&scale, &pair_power(a, b, n - 1)?)?;
            for t in pair_power(&first, &second, k - 1)? {
                out.extend(times_all(&t, &lines)?);
            }
        }
        Ok(out)
    }

    fn split(j: u32) -> (u32, u32) {
        ((j - 1) / 3, (j - 1) % 3 + 1)
    }

    /// Generators of `I(X_j)` from the recursion, starting at `I(X_0) = (f,g)^{k(n-3)}`.
    pub fn recursion_ideal(&self, k: u32, j: u32) -> Result<Ideal> {
        self.check_k(k)?;
        if j > 3 * k {
            return Err(Error::Parameter(format!("j = {j} exceeds 3k = {}", 3 * k)));
        }
        let n = self.n;
        let t = k * (n - 3);
        let mut gens = pair_power(&self.f, &self.g, t)?;
        let (x, y, z) = (self.var(0), self.var(1), self.var(2));
        for step in 1..=j {
            let (i, r) = Self::split(step);
            let a = (k - 1 - i) * (n - 3) + 2 * i;
            let (mult, extra, line) = match r {
                1 => (
                    &self.h,
                    self.fgh_power(a + 1, (i + 1) * (n - 2) - 1, 0)?.checked_mul(&x.pow(i * n + 1)?)?,
                    pair_power(&x, &y, n - 1)?,
                ),
                2 => (
                    &self.f,
                    self.fgh_power(0, a + 1, (i + 1) * (n - 2))?.checked_mul(&y.pow(i * n + 1)?)?,
                    pair_power(&y, &z, n - 1)?,
                ),
                _ => (
                    &self.g,
                    self.fgh_power((i + 1) * (n - 2), 0, a + 2)?.checked_mul(&z.pow(i * n + 1)?)?,
                    pair_power(&x, &z, n - 1)?,
                ),
            };
            let mut next = times_all(mult, &gens)?;
            next.extend(times_all(&extra, &line)?);
            gens = next;
        }
        Ideal::new(&self.ring, gens)
    }

    /// The exponents of `(f,g), (x,y), (y,z), (z,x)` in the intersection
    /// that `I(X_j)` is claimed to equal.
    pub fn recursion_exponents(&self, k: u32, j: u32) -> Result<[u32; 4]> {
        self.check_k(k)?;
        if j == 0 || j > 3 * k {
            return Err(Error::Parameter(format!("j = {j} outside 1..=3k")));
        }
        let n = self.n;
        let (i, r) = Self::split(j);
        let (lo, hi) = (i * n, (i + 1) * n);
        let t = k * (n - 3) + j;
        Ok(match r {
            1 => [t, hi, lo, lo],
            2 => [t, hi, hi, lo],
            _ => [t, hi, hi, hi],
        })
    }

    /// The intersection ideal `I(X_j)` is claimed to equal, computed directly.
    pub fn recursion_intersection(&self, k: u32, j: u32) -> Result<Ideal> {
        self.intersection(self.recursion_exponents(k, j)?)
    }

    /// The displayed minimal reduction of `I^(n)`.
    pub fn reduction_ideal(&self) -> Result<Ideal> {
        self.require_plane_curves()?;
        let n = self.n;
        let cubic = [
            self.fgh_power(2, n - 2, 0)?.checked_mul(&self.xyz_power(n, 0, 0)?)?,
            self.fgh_power(0, 2, n - 2)?.checked_mul(&self.xyz_power(0, n, 0)?)?,
            self.fgh_power(n - 2, 0, 2)?.checked_mul(&self.xyz_power(0, 0, n)?)?,
        ];
        let last = cubic[0].checked_add(&cubic[1])?.checked_add(&cubic[2])?;
        let gens = if n == 3 {
            vec![self.fgh_power(1, 1, 1)?, last]
        } else {
            vec![self.fgh_power(n - 2, 1, 1)?, self.fgh_power(1, n - 2, 1)?, last]
        };
        Ideal::new(&self.ring, gens)
    }
}
