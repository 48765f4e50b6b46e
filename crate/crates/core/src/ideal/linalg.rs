//! Dense linear algebra over `F_p` on graded pieces of the polynomial ring.

use rustc_hash::FxHashMap;

use crate::field::{inv_mod, mul_mod, sub_mod};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// All monomials of total degree `d` in `nvars` variables, descending in `order`.
pub(crate) fn monomials_of_degree(nvars: usize, d: u32, order: MonomialOrder) -> Vec<Monomial> {
    fn rec(i: usize, nvars: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            exps.push(left);
            out.push(Monomial::from_exponents(exps));
            exps.pop();
            return;
        }
        for e in (0..=left).rev() {
            exps.push(e);
            rec(i + 1, nvars, left - e, exps, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(0, nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    }
    out.sort_unstable_by(|a, b| order.cmp(*b, *a));
    out
}

/// Coordinates on a fixed list of monomials.
pub(crate) struct Coordinates {
    index: FxHashMap<Monomial, usize>,
    width: usize,
}

impl Coordinates {
    pub(crate) fn new(monos: &[Monomial]) -> Self {
        Coordinates { index: monos.iter().enumerate().map(|(i, &m)| (m, i)).collect(), width: monos.len() }
    }

    pub(crate) fn width(&self) -> usize {
        self.width
    }

    /// Dense coefficient vector; `None` if `f` has a term outside the list.
    pub(crate) fn vector(&self, f: &Polynomial) -> Option<Vec<u32>> {
        let mut v = vec![0u32; self.width];
        for &(m, c) in f.terms() {
            v[*self.index.get(&m)?] = c.value();
        }
        Some(v)
    }
}

/// Incremental row echelon form with normalized pivots.
pub(crate) struct Echelon {
    p: u32,
    pivot_of: Vec<Option<usize>>,
    rows: Vec<Vec<u32>>,
}

impl Echelon {
    pub(crate) fn new(width: usize, p: u32) -> Self {
        Echelon { p, pivot_of: vec![None; width], rows: Vec::new() }
    }

    /// Reduces `row` in place; returns the first surviving position.
    fn reduce(&self, row: &mut [u32]) -> Option<usize> {
        let p = self.p;
        let mut start = 0;
        loop {
            let lead = (start..row.len()).find(|&j| row[j] != 0)?;
            match self.pivot_of[lead] {
                None => return Some(lead),
                Some(r) => {
                    let c = row[lead];
                    let prow = &self.rows[r];
                    for j in lead..row.len() {
                        if prow[j] != 0 {
                            row[j] = sub_mod(row[j], mul_mod(c, prow[j], p), p);
                        }
                    }
                    start = lead + 1;
                }
            }
        }
    }

    /// Adds a row; returns whether it was independent of the previous ones.
    pub(crate) fn insert(&mut self, mut row: Vec<u32>) -> bool {
        match self.reduce(&mut row) {
            None => false,
            Some(lead) => {
                let inv = inv_mod(row[lead], self.p);
                for x in row[lead..].iter_mut() {
                    *x = mul_mod(*x, inv, self.p);
                }
                self.pivot_of[lead] = Some(self.rows.len());
                self.rows.push(row);
                true
            }
        }
    }
}

/// Basis of `{v : A v = 0}` for a matrix given by rows of length `ncols`.
pub(crate) fn kernel(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut a: Vec<Vec<u32>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&prow) {
                    if y != 0 {
                        *x = sub_mod(*x, mul_mod(f, y, p), p);
                    }
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; ncols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = sub_mod(0, a[i][free], p);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        let ms = monomials_of_degree(3, 4, MonomialOrder::GrevLex);
        assert_eq!(ms.len(), 15);
        assert_eq!(ms[0], Monomial::from_exponents(&[4, 0, 0]));
        assert_eq!(*ms.last().unwrap(), Monomial::from_exponents(&[0, 0, 4]));
        assert_eq!(monomials_of_degree(4, 0, MonomialOrder::GrevLex).len(), 1);
    }

    #[test]
    fn echelon_rank_and_kernel() {
        let p = 7;
        let mut e = Echelon::new(3, p);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(e.insert(vec![2, 4, 1]));
        assert!(!e.insert(vec![3, 6, 4]));
        assert_eq!(e.rows.len(), 2);
        let k = kernel(&[vec![1, 2, 3], vec![2, 4, 1]], 3, p);
        assert_eq!(k, vec![vec![5, 1, 0]]);
    }
}
