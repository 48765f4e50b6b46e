//! Syzygies on the three generators of `I` by graded linear algebra.

use super::FermatContext;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::linalg::{kernel, monomials_of_degree, Coordinates, Echelon};
use crate::ideal::Ideal;
use crate::poly::{Monomial, PolyMatrix, Polynomial};

impl FermatContext {
    fn triple_coordinates(&self, d: u32) -> (Vec<Monomial>, Coordinates) {
        let monos = monomials_of_degree(3, d, self.ring.order());
        let coords = Coordinates::new(&monos);
        (monos, coords)
    }

    fn triple_from(&self, monos: &[Monomial], v: &[u32]) -> [Polynomial; 3] {
        let field = self.ring.field();
        let m = monos.len();
        std::array::from_fn(|i| {
            Polynomial::from_terms(
                &self.ring,
                monos.iter().zip(&v[i * m..(i + 1) * m]).map(|(&mu, &c)| (mu, field.elem(c as i64))),
            )
        })
    }

    fn triple_vector(&self, coords: &Coordinates, t: &[Polynomial; 3]) -> Option<Vec<u32>> {
        let mut out = Vec::with_capacity(3 * coords.width());
        for p in t {
            out.extend(coords.vector(p)?);
        }
        Some(out)
    }

    /// A basis of the syzygies `(P1, P2, P3)` with `deg Pi = d`.
    pub fn syzygies_in_degree(&self, d: u32) -> Result<Vec<[Polynomial; 3]>> {
        let gens = self.ideal.gens();
        let (monos, _) = self.triple_coordinates(d);
        let (_, target) = self.triple_coordinates(d + self.n + 1);
        let m = monos.len();
        let mut rows = vec![vec![0u32; 3 * m]; target.width()];
        for (i, g) in gens.iter().enumerate() {
            for (a, &mu) in monos.iter().enumerate() {
                let prod = g.mul_monomial(mu, FieldElement::ONE)?;
                let v = target.vector(&prod).ok_or(Error::Inhomogeneous)?;
                for (r, c) in v.into_iter().enumerate() {
                    rows[r][i * m + a] = c;
                }
            }
        }
        let ker = kernel(&rows, 3 * m, self.ring.field().modulus());
        Ok(ker.iter().map(|v| self.triple_from(&monos, v)).collect())
    }

    /// The two syzygy degrees, ascending: `{2, n-1}`.
    pub fn syzygy_degrees(&self) -> [u32; 2] {
        let (a, b) = (2, self.n - 1);
        [a.min(b), a.max(b)]
    }

    /// The `3 x 2` presentation matrix of `I`.  Its columns are syzygies of
    /// degrees `2` and `n - 1`; the `2 x 2` minors are checked to regenerate `I`.
    pub fn syzygy_matrix(&self) -> Result<PolyMatrix> {
        let [a, b] = self.syzygy_degrees();
        let low = self.syzygies_in_degree(a)?;
        let cols: Vec<[Polynomial; 3]> = if a == b {
            if low.len() < 2 {
                return Err(Error::Refuted(format!("only {} syzygies in degree {a}", low.len())));
            }
            low[..2].to_vec()
        } else {
            let first = low
                .first()
                .cloned()
                .ok_or_else(|| Error::Refuted(format!("no syzygy in degree {a}")))?;
            let (monos, coords) = self.triple_coordinates(b);
            let mut ech = Echelon::new(3 * monos.len(), self.ring.field().modulus());
            for mu in monomials_of_degree(3, b - a, self.ring.order()) {
                let shifted: [Polynomial; 3] =
                    std::array::from_fn(|i| first[i].mul_monomial(mu, FieldElement::ONE).expect("small degree"));
                ech.insert(self.triple_vector(&coords, &shifted).expect("homogeneous"));
            }
            let second = self
                .syzygies_in_degree(b)?
                .into_iter()
                .find(|s| ech.insert(self.triple_vector(&coords, s).expect("homogeneous")))
                .ok_or_else(|| Error::Refuted(format!("no new syzygy in degree {b}")))?;
            vec![first, second]
        };
        let rows = (0..3).map(|i| vec![cols[0][i].clone(), cols[1][i].clone()]).collect();
        let m = PolyMatrix::from_rows(&self.ring, rows)?;
        let minors = Ideal::new(&self.ring, m.maximal_minors()?)?;
        if !minors.equal(&self.ideal)? {
            return Err(Error::Refuted("minors of the syzygy matrix do not generate I".into()));
        }
        Ok(m)
    }

    /// Bidegrees `(n + 1 + d, 1)` of the two Rees algebra equations.
    pub fn rees_bidegrees(&self) -> [(u32, u32); 2] {
        let [a, b] = self.syzygy_degrees();
        [(self.n + 1 + a, 1), (self.n + 1 + b, 1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syzygy_spaces() {
        let c = FermatContext::auto(3).unwrap();
        assert_eq!(c.syzygies_in_degree(1).unwrap().len(), 0);
        assert_eq!(c.syzygies_in_degree(2).unwrap().len(), 2);
        let c4 = FermatContext::auto(4).unwrap();
        assert_eq!(c4.syzygies_in_degree(2).unwrap().len(), 1);
    }

    #[test]
    fn presentation_matrix() {
        for n in 2..=5 {
            let c = FermatContext::auto(n).unwrap();
            let m = c.syzygy_matrix().unwrap();
            assert_eq!((m.rows(), m.cols()), (3, 2));
            let mut degs: Vec<u32> = (0..2).map(|j| m.get(0, j).degree().or(m.get(1, j).degree()).unwrap()).collect();
            degs.sort();
            assert_eq!(degs, c.syzygy_degrees().to_vec());
            // each column really is a syzygy
            for j in 0..2 {
                let mut s = Polynomial::zero(c.ring());
                for i in 0..3 {
                    s = s + m.get(i, j) * &c.ideal().gens()[i];
                }
                assert!(s.is_zero());
            }
        }
        let c = FermatContext::auto(3).unwrap();
        assert_eq!(c.rees_bidegrees(), [(6, 1), (6, 1)]);
        assert_eq!(FermatContext::auto(5).unwrap().rees_bidegrees(), [(8, 1), (10, 1)]);
    }
}
