//! The `H`, `C`, `E` blocks and the Hilbert–Burch matrices assembled from them.

use std::sync::Arc;

use super::FermatContext;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::Ideal;
use crate::poly::{PolyMatrix, Polynomial, Ring};

fn signed(p: Polynomial, e: u32) -> Polynomial {
    if e % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `(t+1) x t`, column `c` holding `-b` at row `c` and `a` at row `c+1`.
/// `t = 0` gives the empty `1 x 0` matrix.
pub(crate) fn h_matrix(a: &Polynomial, b: &Polynomial, t: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(a.ring(), t + 1, t);
    for c in 0..t {
        m.set(c, c, -b);
        m.set(c + 1, c, a.clone());
    }
    m
}

pub fn block_h(a: &Polynomial, b: &Polynomial, t: usize) -> Result<PolyMatrix> {
    if t == 0 {
        return Err(Error::Shape("H(a,b)_t needs t >= 1".into()));
    }
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(h_matrix(a, b, t))
}

/// `t x t` with `a` on the diagonal, `-b` on the superdiagonal and in the
/// bottom-left corner.
pub fn block_c(a: &Polynomial, b: &Polynomial, t: usize) -> Result<PolyMatrix> {
    if t < 2 {
        return Err(Error::Shape("C(a,b)_t needs t >= 2".into()));
    }
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let mut m = PolyMatrix::zeros(a.ring(), t, t);
    for i in 0..t {
        m.set(i, i, a.clone());
        m.set(i, (i + 1) % t, -b);
    }
    Ok(m)
}

/// Binomials `C(j, 0..=j)` reduced mod p; a zero residue is an error.
pub(crate) fn binomial_row(ring: &Ring, j: usize) -> Result<Vec<FieldElement>> {
    let field = ring.field();
    let mut row = vec![field.elem(1)];
    for _ in 0..j {
        let mut next = vec![field.elem(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = field.add(row[i - 1], row[i]);
        }
        row = next;
    }
    if let Some(i) = row.iter().position(|c| c.is_zero()) {
        return Err(Error::Field(format!(
            "binomial C({j}, {i}) vanishes mod {}; choose a larger prime",
            field.modulus()
        )));
    }
    Ok(row)
}

/// The column `E_j` of binomial coefficients.
pub fn vector_e(j: usize, ring: &Arc<Ring>) -> Result<PolyMatrix> {
    let entries = binomial_row(ring, j)?
        .into_iter()
        .map(|c| Polynomial::constant(ring, c.value() as i64))
        .collect();
    PolyMatrix::column_vector(ring, entries)
}

/// `c * E_j` as a list of polynomials.
fn scaled_e(c: &Polynomial, j: usize) -> Result<Vec<Polynomial>> {
    Ok(binomial_row(c.ring(), j)?.into_iter().map(|b| c.scale(b)).collect())
}

impl FermatContext {
    fn pencil_blocks(&self) -> Result<[PolyMatrix; 3]> {
        let n = self.n as usize;
        let (x, y, z) = (self.var(0), self.var(1), self.var(2));
        Ok([block_c(&x, &y, n)?, block_c(&y, &z, n)?, block_c(&z, &x, n)?])
    }

    /// `[H(f,g)_t U V W]` over the three diagonal `C` blocks, where `t` is
    /// the column count of the `H` part and `u, v, w` are the first columns
    /// of `U, V, W` (length `t + 1`).
    fn three_block(&self, t: usize, u: &[Polynomial], v: &[Polynomial], w: &[Polynomial]) -> Result<PolyMatrix> {
        let n = self.n as usize;
        let mut m = PolyMatrix::zeros(&self.ring, t + 3 * n + 1, t + 3 * n);
        m.set_block(0, 0, &h_matrix(&self.f, &self.g, t))?;
        for (b, col) in [u, v, w].iter().enumerate() {
            for (r, e) in col.iter().enumerate() {
                m.set(r, t + b * n, e.clone());
            }
        }
        for (b, c) in self.pencil_blocks()?.iter().enumerate() {
            m.set_block(t + 1 + b * n, t + b * n, c)?;
        }
        Ok(m)
    }

    /// The `(k(n-3)+3n+1) x (k(n-3)+3n)` matrix whose minors generate `I^(n)` at `k = 1`.
    pub fn build_x3(&self, k: u32) -> Result<PolyMatrix> {
        self.require_plane_curves()?;
        if k == 0 {
            return Err(Error::Parameter("k must be at least 1".into()));
        }
        let n = self.n;
        let t = (k * (n - 3)) as usize;
        let zero = Polynomial::zero(&self.ring);
        let mut u = vec![zero.clone(); t + 1];
        u[n as usize - 3] = signed(&self.var(0) * &self.f, k * (n - 3));
        let mut v = vec![zero.clone(); t + 1];
        let yg = signed(&self.var(1) * &self.g, (k - 1) * (n - 3));
        for (i, e) in scaled_e(&yg, n as usize - 3)?.into_iter().enumerate() {
            v[t + 1 - (n as usize - 2) + i] = e;
        }
        let mut w = vec![zero; t + 1];
        let zh = signed(&self.var(2) * &self.h, n - 3);
        for (i, e) in scaled_e(&zh, ((k - 1) * (n - 3)) as usize)?.into_iter().enumerate() {
            w[i] = e;
        }
        self.three_block(t, &u, &v, &w)
    }

    /// The `(4n-3) x (4n-4)` matrix for `I^(n-1)`, `n >= 4`.
    pub fn build_x3_prime(&self) -> Result<PolyMatrix> {
        let n = self.n;
        if n < 4 {
            return Err(Error::Parameter(format!("X3' needs n >= 4, got {n}")));
        }
        let t = (n - 4) as usize;
        let zero = Polynomial::zero(&self.ring);
        let mut u = vec![zero; t + 1];
        u[t] = signed(self.f.clone(), n - 4);
        let v = scaled_e(&self.g, t)?;
        let w = scaled_e(&self.h, t)?;
        self.three_block(t, &u, &v, &w)
    }

    /// Number of rows and columns of `X_j`.
    pub fn xj_shape(&self, k: u32, j: u32) -> (usize, usize) {
        let cols = (k * (self.n - 3) + j * self.n) as usize;
        (cols + 1, cols)
    }

    /// The prescribed value of `det [X_{j-3} | S_j]` for `4 <= j <= 3k`.
    pub fn s_target(&self, k: u32, j: u32) -> Result<Polynomial> {
        self.require_plane_curves()?;
        if j < 4 || j > 3 * k {
            return Err(Error::Parameter(format!("S_j targets exist for 4 <= j <= 3k, got j = {j}")));
        }
        let n = self.n;
        let (i, r) = ((j - 1) / 3, (j - 1) % 3 + 1);
        let a = (k - 1 - i) * (n - 3) + 2 * i;
        match r {
            1 => self.fgh_power(a, (i + 1) * (n - 2) - 2, 0)?.checked_mul(&self.xyz_power(i * n + 1, 0, 0)?),
            2 => self.fgh_power(0, a, (i + 1) * (n - 2) - 1)?.checked_mul(&self.xyz_power(0, i * n + 1, 0)?),
            _ => self.fgh_power((i + 1) * (n - 2) - 1, 0, a + 1)?.checked_mul(&self.xyz_power(0, 0, i * n + 1)?),
        }
    }

    /// The explicit first columns for `j = 1, 2, 3`, on the `k(n-3)+1` rows of `X_0`.
    fn s_initial(&self, k: u32, r: u32) -> Result<Vec<Polynomial>> {
        let n = self.n;
        let t = (k * (n - 3)) as usize;
        let mut s = vec![Polynomial::zero(&self.ring); t + 1];
        match r {
            1 => s[n as usize - 3] = signed(&self.var(0) * &self.f, k * (n - 3)),
            2 => {
                let yg = signed(&self.var(1) * &self.g, (k - 1) * (n - 3));
                let top = t + 1 - (n as usize - 2);
                for (i, e) in scaled_e(&yg, n as usize - 3)?.into_iter().enumerate() {
                    s[top + i] = e;
                }
            }
            _ => {
                let zh = signed(&self.var(2) * &self.h, n - 3);
                for (i, e) in scaled_e(&zh, ((k - 1) * (n - 3)) as usize)?.into_iter().enumerate() {
                    s[i] = e;
                }
            }
        }
        Ok(s)
    }

    /// A column `s` with `det [x | s] = target`, from a membership
    /// certificate against the maximal minors of `x`.
    fn s_lifted(&self, x: &PolyMatrix, target: &Polynomial) -> Result<Vec<Polynomial>> {
        let minors = x.maximal_minors()?;
        let cert = match Ideal::new(&self.ring, minors)?.lift(target) {
            Ok(c) => c,
            Err(Error::NotMember) => {
                return Err(Error::Refuted(format!("{target} is not in the ideal of maximal minors")));
            }
            Err(e) => return Err(e),
        };
        let last = x.rows() - 1;
        let s: Vec<Polynomial> =
            cert.coefficients.into_iter().enumerate().map(|(c, q)| signed(q, (c + last) as u32)).collect();
        let det = x.hconcat(&PolyMatrix::column_vector(&self.ring, s.clone())?)?.determinant()?;
        if &det != target {
            return Err(Error::Refuted(format!("lifted column gives determinant {det}, expected {target}")));
        }
        Ok(s)
    }

    /// `X_0, X_1, ..., X_j`.
    pub fn xj_chain(&self, k: u32, j: u32) -> Result<Vec<PolyMatrix>> {
        self.require_plane_curves()?;
        if k == 0 || j > 3 * k {
            return Err(Error::Parameter(format!("need k >= 1 and j <= 3k, got k = {k}, j = {j}")));
        }
        let n = self.n as usize;
        let pencils = self.pencil_blocks()?;
        let mut chain = vec![h_matrix(&self.f, &self.g, (k * (self.n - 3)) as usize)];
        for step in 1..=j {
            let r = (step - 1) % 3 + 1;
            let s = if step <= 3 {
                self.s_initial(k, r)?
            } else {
                self.s_lifted(&chain[step as usize - 3], &self.s_target(k, step)?)?
            };
            let prev = chain.last().expect("nonempty");
            let (rows, cols) = (prev.rows(), prev.cols());
            let mut next = PolyMatrix::zeros(&self.ring, rows + n, cols + n);
            next.set_block(0, 0, prev)?;
            for (i, e) in s.into_iter().enumerate() {
                next.set(i, cols, e);
            }
            next.set_block(rows, cols, &pencils[r as usize - 1])?;
            chain.push(next);
        }
        Ok(chain)
    }

    /// `X_j` for `1 <= j <= 3k`.
    pub fn build_xj(&self, k: u32, j: u32) -> Result<PolyMatrix> {
        if j == 0 {
            return Err(Error::Parameter("X_j is defined here for j >= 1".into()));
        }
        Ok(self.xj_chain(k, j)?.pop().expect("nonempty"))
    }

    /// The ideal generated by the maximal minors of `m`.
    pub fn minors_ideal(&self, m: &PolyMatrix) -> Result<Ideal> {
        Ideal::new(&self.ring, m.maximal_minors()?)
    }
}
