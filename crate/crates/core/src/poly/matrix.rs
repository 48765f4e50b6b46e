use std::fmt;
use std::sync::Arc;

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::par;

/// Dense rectangular matrix of polynomials over one ring.
///
/// Empty shapes are allowed: a `0 x 0` matrix has determinant 1 and a
/// `1 x 0` matrix has the single maximal minor 1.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows of unequal length".into()));
        }
        let nrows = rows.len();
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols, entries })
    }

    pub fn column_vector(ring: &Arc<Ring>, entries: Vec<Polynomial>) -> Result<Self> {
        PolyMatrix::from_rows(ring, entries.into_iter().map(|e| vec![e]).collect())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    /// Panics on out-of-range indices or a foreign ring.
    pub fn set(&mut self, r: usize, c: usize, value: Polynomial) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert!(value.ring() == &self.ring, "entry from another ring");
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Copies `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix) -> Result<()> {
        if r0 + block.rows > self.rows || c0 + block.cols > self.cols {
            return Err(Error::Shape(format!(
                "{}x{} block at ({r0},{c0}) does not fit in {}x{}",
                block.rows, block.cols, self.rows, self.cols
            )));
        }
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
        Ok(())
    }

    /// The `rows x cols` block starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Result<PolyMatrix> {
        if r0 + rows > self.rows || c0 + cols > self.cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} block at ({r0},{c0}) exceeds {}x{}",
                self.rows, self.cols
            )));
        }
        let rows = (r0..r0 + rows).map(|r| self.row(r)[c0..c0 + cols].to_vec()).collect();
        let mut m = PolyMatrix::from_rows(&self.ring, rows)?;
        m.cols = cols;
        Ok(m)
    }

    /// Side-by-side concatenation.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!("row counts {} and {} differ", self.rows, other.rows)));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self)?;
        out.set_block(0, self.cols, other)?;
        Ok(out)
    }

    pub fn without_row(&self, i: usize) -> PolyMatrix {
        let rows = (0..self.rows).filter(|&r| r != i).map(|r| self.row(r).to_vec()).collect();
        let mut m = PolyMatrix::from_rows(&self.ring, rows).expect("same shape");
        m.cols = self.cols;
        m
    }

    fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        match bareiss(&self.ring, self.to_rows(), n - 1)? {
            None => Ok(Polynomial::zero(&self.ring)),
            Some((negate, a)) => {
                let d = a[n - 1][n - 1].clone();
                Ok(if negate { -d } else { d })
            }
        }
    }

    /// For a `(c+1) x c` matrix, the determinants with row `i` deleted, in row order.
    ///
    /// All minors come out of one elimination of `[M | I]`: after clearing
    /// the first `c` columns, the last row holds `±` each minor.
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial>> {
        let n = self.cols;
        if self.rows != n + 1 {
            return Err(Error::Shape(format!(
                "maximal minors need rows = cols + 1, got {}x{}",
                self.rows, self.cols
            )));
        }
        let one = Polynomial::one(&self.ring);
        let zero = Polynomial::zero(&self.ring);
        let mut aug = self.to_rows();
        for (i, row) in aug.iter_mut().enumerate() {
            row.extend((0..=n).map(|j| if i == j { one.clone() } else { zero.clone() }));
        }
        match bareiss(&self.ring, aug, n)? {
            None => Ok(vec![zero; n + 1]),
            Some((negate, a)) => Ok((0..=n)
                .map(|c| {
                    let v = a[n][n + c].clone();
                    if negate ^ ((c + n) % 2 == 1) {
                        -v
                    } else {
                        v
                    }
                })
                .collect()),
        }
    }
}

/// Bareiss elimination of the first `steps` columns.
///
/// Returns the row-swap parity and the transformed rows, or `None` when a
/// column has no pivot (the leading `steps` columns are rank deficient).
/// Pivots are chosen with the fewest terms to limit growth.
fn bareiss(
    ring: &Arc<Ring>,
    mut a: Vec<Vec<Polynomial>>,
    steps: usize,
) -> Result<Option<(bool, Vec<Vec<Polynomial>>)>> {
    let n = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut negate = false;
    let mut prev = Polynomial::one(ring);
    for s in 0..steps {
        let Some(piv) = (s..n).filter(|&r| !a[r][s].is_zero()).min_by_key(|&r| (a[r][s].len(), r)) else {
            return Ok(None);
        };
        if piv != s {
            a.swap(s, piv);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(s + 1);
        let prow = &top[s];
        let akk = &prow[s];
        let updated: Vec<Result<Vec<Polynomial>>> = par::map(rest, |row| {
            let aik = &row[s];
            let mut out = Vec::with_capacity(width);
            out.extend(row[..=s].iter().map(|_| Polynomial::zero(ring)));
            for j in s + 1..width {
                let mut v = akk.checked_mul(&row[j])?;
                if !aik.is_zero() && !prow[j].is_zero() {
                    v = v.checked_sub(&aik.checked_mul(&prow[j])?)?;
                }
                if s > 0 && !v.is_zero() {
                    v = v.exact_div(&prev)?;
                }
                out.push(v);
            }
            Ok(out)
        });
        for (row, new) in rest.iter_mut().zip(updated) {
            *row = new?;
        }
        prev = a[s][s].clone();
    }
    Ok(Some((negate, a)))
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Polynomial::render).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Monomial;
    use proptest::prelude::*;

    fn ring() -> Arc<Ring> {
        Ring::xyz(PrimeField::new(10009, 3).unwrap())
    }

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        let r = ring();
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| Polynomial::parse(s, &r).unwrap()).collect())
            .collect();
        PolyMatrix::from_rows(&r, rows).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &ring()).unwrap()
    }

    fn cofactor_det(a: &PolyMatrix) -> Polynomial {
        let n = a.rows();
        if n == 0 {
            return Polynomial::one(a.ring());
        }
        let mut acc = Polynomial::zero(a.ring());
        for c in 0..n {
            let minor_rows: Vec<Vec<Polynomial>> = (1..n)
                .map(|r| (0..n).filter(|&j| j != c).map(|j| a.get(r, j).clone()).collect())
                .collect();
            let minor = PolyMatrix::from_rows(a.ring(), minor_rows).unwrap();
            let minor = PolyMatrix { cols: n - 1, ..minor };
            let term = a.get(0, c) * &cofactor_det(&minor);
            acc = if c % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn circulant_determinant() {
        let c = m(&[&["x", "-y", "0"], &["0", "x", "-y"], &["-y", "0", "x"]]);
        assert_eq!(c.determinant().unwrap(), p("x^3 - y^3"));
    }

    #[test]
    fn small_determinants() {
        // [H(f,g)_1 | e_1] for n = 3
        let a = m(&[&["x^3 - z^3", "1"], &["y^3 - z^3", "0"]]);
        assert_eq!(a.determinant().unwrap(), -p("y^3 - z^3"));
        assert_eq!(m(&[&["x*y + z^2"]]).determinant().unwrap(), p("x*y + z^2"));
        assert_eq!(PolyMatrix::zeros(&ring(), 0, 0).determinant().unwrap(), p("1"));
        assert!(m(&[&["x", "y"]]).determinant().is_err());
    }

    #[test]
    fn minors_of_h_blocks() {
        let h1 = m(&[&["-y"], &["x"]]);
        assert_eq!(h1.maximal_minors().unwrap(), vec![p("x"), p("-y")]);
        let h2 = m(&[&["-y", "0"], &["x", "-y"], &["0", "x"]]);
        assert_eq!(h2.maximal_minors().unwrap(), vec![p("x^2"), p("-x*y"), p("y^2")]);
        assert_eq!(PolyMatrix::zeros(&ring(), 1, 0).maximal_minors().unwrap(), vec![p("1")]);
        assert!(m(&[&["x"]]).maximal_minors().is_err());
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = PolyMatrix> {
        let entry = proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -3i64..4), 0..3);
        proptest::collection::vec(entry, rows * cols).prop_map(move |es| {
            let r = ring();
            let f = *r.field();
            let entries: Vec<Polynomial> = es
                .into_iter()
                .map(|ts| {
                    Polynomial::from_terms(
                        &r,
                        ts.into_iter().map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), f.elem(k))),
                    )
                })
                .collect();
            PolyMatrix { ring: r, rows, cols, entries }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn bareiss_matches_cofactor_expansion(a in (1usize..5).prop_flat_map(|n| arb_matrix(n, n))) {
            prop_assert_eq!(a.determinant().unwrap(), cofactor_det(&a));
        }

        #[test]
        fn minors_match_row_deletion(a in (0usize..4).prop_flat_map(|n| arb_matrix(n + 1, n))) {
            let minors = a.maximal_minors().unwrap();
            for (i, mi) in minors.iter().enumerate() {
                prop_assert_eq!(mi, &cofactor_det(&a.without_row(i)));
            }
        }
    }
}
