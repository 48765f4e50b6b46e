//! Ideals with cached Gröbner bases and the usual ideal algebra.

mod groebner;
pub(crate) mod linalg;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::par;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use linalg::{monomials_of_degree, Coordinates, Echelon};

/// Iteration bound for [`Ideal::saturate`].
pub const SATURATION_LIMIT: u32 = 64;

/// A finitely generated ideal.
///
/// Gröbner bases are computed on demand and cached per monomial order.  The
/// cache takes the first basis written for an order; a reader that misses
/// computes its own copy without holding the lock.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

/// Witness that `target = Σ coefficients[i] * generators[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
    pub coefficients: Vec<Polynomial>,
}

impl Certificate {
    /// Re-expands the combination with plain arithmetic.
    pub fn verify(&self) -> bool {
        if self.generators.len() != self.coefficients.len() {
            return false;
        }
        let mut acc = Polynomial::zero(self.target.ring());
        for (c, g) in self.coefficients.iter().zip(&self.generators) {
            match c.checked_mul(g).and_then(|t| acc.checked_add(&t)) {
                Ok(s) => acc = s,
                Err(_) => return false,
            }
        }
        acc == self.target
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("cache lock").clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: RwLock::new(cache) }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(Polynomial::render)).finish()
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), gens, cache: RwLock::new(HashMap::new()) })
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| Polynomial::parse(s, ring)).collect::<Result<_>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty")
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by the ring variables.
    pub fn irrelevant(ring: &Arc<Ring>) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Generators in canonical text form.
    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(Polynomial::render).collect()
    }

    fn seed(&self, order: MonomialOrder, basis: Vec<Polynomial>) {
        self.cache.write().expect("cache lock").entry(order).or_insert_with(|| Arc::new(basis));
    }

    /// Reduced monic Gröbner basis in the ring's order, sorted by ascending leading monomial.
    pub fn groebner(&self) -> Result<Arc<Vec<Polynomial>>> {
        self.groebner_in(self.ring.order())
    }

    /// Reduced basis for another order; its polynomials live in the re-ordered ring.
    pub fn groebner_in(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.read().expect("cache lock").get(&order) {
            return Ok(b.clone());
        }
        let ring = if order == self.ring.order() { self.ring.clone() } else { self.ring.with_order(order)? };
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.to_ring(&ring)).collect::<Result<_>>()?;
        let out = groebner::groebner(&ring, &gens, false)?;
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry(order).or_insert_with(|| Arc::new(out.basis)).clone())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.groebner()?.is_empty())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.iter().any(Polynomial::is_constant))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_ring(f.ring())?;
        let basis = self.groebner()?;
        Ok(groebner::normal_form(&basis, f, false).0)
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(&other.ring)?;
        let basis = self.groebner()?;
        Ok(par::map(&other.gens, |g| groebner::normal_form(&basis, g, false).0.is_zero())
            .into_iter()
            .all(|b| b))
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(&other.ring)?;
        let (a, b) = par::join(|| self.groebner(), || other.groebner());
        Ok(*a? == *b?)
    }

    fn check_ring(&self, ring: &Arc<Ring>) -> Result<()> {
        if &self.ring == ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// All pairwise products, duplicates removed.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let pairs: Vec<(&Polynomial, &Polynomial)> =
            self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| (a, b))).collect();
        let prods = par::map(&pairs, |(a, b)| a.checked_mul(b)).into_iter().collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, dedup(prods))
    }

    /// `m`-th power, generated by products over multisets of generators.
    pub fn power(&self, m: u32) -> Result<Ideal> {
        if m == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let gens: Vec<&Polynomial> = self.gens.iter().filter(|g| !g.is_zero()).collect();
        let mut out = Vec::new();
        fn rec(
            gens: &[&Polynomial],
            start: usize,
            left: u32,
            acc: &Polynomial,
            out: &mut Vec<Polynomial>,
        ) -> Result<()> {
            if left == 0 {
                out.push(acc.clone());
                return Ok(());
            }
            for i in start..gens.len() {
                rec(gens, i, left - 1, &acc.checked_mul(gens[i])?, out)?;
            }
            Ok(())
        }
        rec(&gens, 0, m, &Polynomial::one(&self.ring), &mut out)?;
        Ideal::new(&self.ring, dedup(out))
    }

    /// `self ∩ other` by eliminating `t` from `t*self + (1 - t)*other`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let a: Vec<&Polynomial> = self.gens.iter().filter(|g| !g.is_zero()).collect();
        let b: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if a.is_empty() || b.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        let rt = self.ring.with_front_variable()?;
        let t = Monomial::var(0);
        let one = FieldElement::ONE;
        let mut gens = Vec::with_capacity(a.len() + b.len());
        for g in a {
            gens.push(g.embed_after(&rt, 1).mul_monomial(t, one)?);
        }
        for g in b {
            let e = g.embed_after(&rt, 1);
            gens.push(e.checked_sub(&e.mul_monomial(t, one)?)?);
        }
        let out = groebner::groebner(&rt, &gens, false)?;
        let result: Vec<Polynomial> = out.basis.iter().filter_map(|g| g.drop_front(&self.ring, 1)).collect();
        let ideal = Ideal::new(&self.ring, result.clone())?;
        if self.ring.order() == MonomialOrder::GrevLex {
            // the block order restricts to grevlex, so this is already the reduced basis
            ideal.seed(MonomialOrder::GrevLex, result);
        }
        Ok(ideal)
    }

    /// `self : f = {g : g*f ∈ self}`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_ring(f.ring())?;
        if f.is_zero() {
            return Err(Error::Parameter("colon by the zero polynomial".into()));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet.gens.iter().map(|g| g.exact_div(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `self : other`, the intersection of the colons by each generator.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let gens: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(Ideal::unit(&self.ring));
        }
        let colons = par::map(&gens, |g| self.colon(g)).into_iter().collect::<Result<Vec<_>>>()?;
        let mut it = colons.into_iter();
        let first = it.next().expect("nonempty");
        it.try_fold(first, |acc, c| acc.intersect(&c))
    }

    /// `self : other^∞`, iterating colons until the ideal stops growing.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..SATURATION_LIMIT {
            let next = cur.colon_ideal(other)?;
            if next.equal(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::Parameter(format!("saturation did not stabilize within {SATURATION_LIMIT} steps")))
    }

    /// Saturation by the ideal of the variables.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        self.saturate(&Ideal::irrelevant(&self.ring))
    }

    /// Expresses `f` in the generators of `self` by tracking cofactors through Buchberger.
    pub fn lift(&self, f: &Polynomial) -> Result<Certificate> {
        self.check_ring(f.ring())?;
        let out = groebner::groebner(&self.ring, &self.gens, true)?;
        let (rem, quot) = groebner::normal_form(&out.basis, f, true);
        if !rem.is_zero() {
            return Err(Error::NotMember);
        }
        let cofs = out.cofactors.expect("tracked");
        let quot = quot.expect("tracked");
        let mut coefficients = vec![Polynomial::zero(&self.ring); self.gens.len()];
        for (q, cof) in quot.iter().zip(&cofs) {
            if q.is_zero() {
                continue;
            }
            for (c, b) in coefficients.iter_mut().zip(cof) {
                *c = c.checked_add(&q.checked_mul(b)?)?;
            }
        }
        Ok(Certificate { target: f.clone(), generators: self.gens.clone(), coefficients })
    }

    fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        Ok(self.groebner()?.iter().filter_map(Polynomial::leading_monomial).collect())
    }

    /// Leading monomials of the reduced basis (homogeneous ideals only).
    pub fn initial_monomials(&self) -> Result<Vec<Monomial>> {
        self.leading_monomials()
    }

    /// `dim_K a_d`.
    pub fn graded_dim(&self, d: u32) -> Result<u64> {
        let lms = self.leading_monomials()?;
        let monos = monomials_of_degree(self.ring.nvars(), d, self.ring.order());
        Ok(monos.iter().filter(|m| lms.iter().any(|l| l.divides(**m))).count() as u64)
    }

    /// Degrees of a minimal homogeneous generating set, ascending, with multiplicity.
    pub fn minimal_generator_degrees(&self) -> Result<Vec<u32>> {
        Ok(self.minimal_generators()?.iter().filter_map(Polynomial::degree).collect())
    }

    /// A minimal homogeneous generating set drawn from the reduced basis,
    /// by ascending degree.
    ///
    /// Only degrees of leading monomials can carry new minimal generators.
    /// In degree `d` the piece `a_d` is `R_1 * a_{d-1}` plus the span of the
    /// basis elements of degree `d`; those that raise the rank are kept.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let lms = self.leading_monomials()?;
        let basis = self.groebner()?;
        let mut degrees: Vec<u32> = lms.iter().map(|m| m.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let picked = par::map(&degrees, |&d| self.new_generators_in_degree(&basis, d));
        let mut out = Vec::new();
        for p in picked {
            out.extend(p?);
        }
        Ok(out)
    }

    fn new_generators_in_degree(&self, basis: &[Polynomial], d: u32) -> Result<Vec<Polynomial>> {
        let order = self.ring.order();
        let nv = self.ring.nvars();
        let fresh = basis.iter().filter(|g| g.degree() == Some(d));
        if d == 0 {
            return Ok(fresh.cloned().collect());
        }
        let top = monomials_of_degree(nv, d, order);
        let coords = Coordinates::new(&top);
        let mut ech = Echelon::new(coords.width(), self.ring.field().modulus());
        let one = FieldElement::ONE;
        for m in monomials_of_degree(nv, d - 1, order) {
            let Some(g) = basis.iter().find(|g| g.leading_monomial().is_some_and(|l| l.divides(m))) else {
                continue;
            };
            let q = m.div(g.leading_monomial().expect("nonzero")).expect("divides");
            let elem = g.mul_monomial(q, one)?;
            for v in 0..nv {
                let prod = elem.mul_monomial(Monomial::var(v), one)?;
                ech.insert(coords.vector(&prod).expect("homogeneous of degree d"));
            }
        }
        Ok(fresh.filter(|g| ech.insert(coords.vector(g).expect("homogeneous of degree d"))).cloned().collect())
    }
}

fn dedup(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen = std::collections::HashSet::new();
    polys.into_iter().filter(|p| !p.is_zero() && seen.insert(p.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring() -> Arc<Ring> {
        Ring::xyz(PrimeField::new(10009, 3).unwrap())
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(&ring(), gens).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &ring()).unwrap()
    }

    fn fermat(n: u32) -> Ideal {
        ideal(&[
            &format!("x*y^{n} - x*z^{n}"),
            &format!("y*z^{n} - y*x^{n}"),
            &format!("z*x^{n} - z*y^{n}"),
        ])
    }

    #[test]
    fn basis_examples() {
        let m = ideal(&["x^2", "x*y", "y^2"]);
        let b = m.groebner().unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|g| g.len() == 1));
        let lin = ideal(&["x - y", "y - z"]);
        let lms: Vec<_> = lin.groebner().unwrap().iter().map(|g| g.leading_monomial().unwrap()).collect();
        assert_eq!(lms, vec![Monomial::var(1), Monomial::var(0)]);
    }

    #[test]
    fn groebner_is_idempotent() {
        let i = fermat(3);
        let b = i.groebner().unwrap();
        let again = Ideal::new(&ring(), b.to_vec()).unwrap();
        assert_eq!(*again.groebner().unwrap(), *b);
    }

    #[test]
    fn membership() {
        let i = fermat(3);
        assert!(i.member(&p("x*y^3 - x*z^3")).unwrap());
        assert!(!i.member(&p("x")).unwrap());
        let fgh = p("y^3 - z^3")
            * p("z^3 - x^3")
            * p("x^3 - y^3");
        assert!(i.member(&fgh).unwrap());
    }

    #[test]
    fn equality() {
        assert!(ideal(&["x", "y"]).equal(&ideal(&["x + y", "y"])).unwrap());
        assert!(!ideal(&["x"]).equal(&ideal(&["x^2"])).unwrap());
    }

    #[test]
    fn sums_products_powers() {
        let m = ideal(&["x", "y"]).power(2).unwrap();
        assert_eq!(m.gens().len(), 3);
        assert!(m.equal(&ideal(&["x^2", "x*y", "y^2"])).unwrap());
        let pr = ideal(&["x"]).product(&ideal(&["y"])).unwrap();
        assert_eq!(pr.gens(), &[p("x*y")]);
        let a = ideal(&["x + z", "y^2"]);
        assert!(a.power(3).unwrap().equal(&a.power(1).unwrap().product(&a.power(2).unwrap()).unwrap()).unwrap());
        assert!(ideal(&["x"]).sum(&ideal(&["y"])).unwrap().equal(&ideal(&["x", "y"])).unwrap());
    }

    #[test]
    fn intersections() {
        assert!(ideal(&["x"]).intersect(&ideal(&["y"])).unwrap().equal(&ideal(&["x*y"])).unwrap());
        let a = ideal(&["x^2", "y"]);
        let b = ideal(&["x"]);
        let c = a.intersect(&b).unwrap();
        assert!(c.equal(&ideal(&["x^2", "x*y"])).unwrap());
        assert!(a.contains(&c).unwrap() && b.contains(&c).unwrap());
        // brute-force oracle on graded pieces: dim (a ∩ b)_d from monomial counting
        for d in 0..=4u32 {
            let both = monomials_of_degree(3, d, MonomialOrder::GrevLex)
                .into_iter()
                .filter(|m| (m.exponent(0) >= 2 || m.exponent(1) >= 1) && m.exponent(0) >= 1)
                .count() as u64;
            assert_eq!(c.graded_dim(d).unwrap(), both);
        }
    }

    #[test]
    fn colon_and_saturation() {
        assert!(ideal(&["x*y"]).colon(&p("x")).unwrap().equal(&ideal(&["y"])).unwrap());
        let s = ideal(&["x^2", "x*y", "x*z"]).saturate_irrelevant().unwrap();
        assert!(s.equal(&ideal(&["x"])).unwrap());
        // in three variables (x^2, x*y) has an embedded (x, y)-primary component, not an m-primary one
        let a = ideal(&["x^2", "x*y"]);
        assert!(a.saturate_irrelevant().unwrap().equal(&a).unwrap());
        let plane = Ring::new(["x", "y"], *ring().field(), MonomialOrder::GrevLex).unwrap();
        let b = Ideal::parse(&plane, &["x^2", "x*y"]).unwrap();
        assert!(b.saturate_irrelevant().unwrap().equal(&Ideal::parse(&plane, &["x"]).unwrap()).unwrap());
    }

    #[test]
    fn lifting() {
        let f = p("y^3 - z^3");
        let g = p("z^3 - x^3");
        let h = p("x^3 - y^3");
        let fg = Ideal::new(&ring(), vec![f.clone(), g.clone()]).unwrap();
        let cert = fg.lift(&h).unwrap();
        assert!(cert.verify());
        assert_eq!(cert.coefficients, vec![p("-1"), p("-1")]);
        let cert = Ideal::new(&ring(), vec![f.clone()]).unwrap().lift(&f).unwrap();
        assert_eq!(cert.coefficients, vec![p("1")]);
        assert_eq!(ideal(&["x^2", "y^2"]).lift(&p("x*y")), Err(Error::NotMember));
        assert_eq!(ideal(&["x^2", "y^2"]).lift(&p("x^2*y")).unwrap().coefficients, vec![p("y"), p("0")]);
        let i = fermat(3);
        let target = p("x^2*y^3 + 7*z*x*y^3 - 2*z*x^4 + x^5 - x^2*z^3");
        if i.member(&target).unwrap() {
            assert!(i.lift(&target).unwrap().verify());
        }
        let combo = &(&p("x + 2*z") * &i.gens()[0]) - &(&p("y*z") * &i.gens()[2]);
        assert!(i.lift(&combo).unwrap().verify());
    }

    #[test]
    fn graded_dimensions() {
        assert_eq!(Ideal::irrelevant(&ring()).graded_dim(1).unwrap(), 3);
        assert_eq!(fermat(3).minimal_generator_degrees().unwrap(), vec![4, 4, 4]);
        assert_eq!(ideal(&["x^2", "x*y", "y^2", "x^3 + z^3"]).minimal_generator_degrees().unwrap(), vec![2, 2, 2, 3]);
        assert_eq!(ideal(&["x + z"]).graded_dim(2).unwrap(), 3);
        assert!(matches!(ideal(&["x + 1"]).graded_dim(1), Err(Error::Inhomogeneous)));
    }
}
