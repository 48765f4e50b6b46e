//! Hilbert functions, series numerators and the invariants read off them.
//!
//! The numerator `N(t)` with `HS(R/a) = N(t) / (1 - t)^v` is computed
//! exactly from the initial ideal by pivoting on variables:
//! `K(M) = K(M + (x)) + t * K(M : x)`.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{degree_cap, Monomial};

/// Hilbert function values and series numerator of `R/a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProfile {
    /// `values[d] = HF(R/a, d)` for `d = 0..=D`.
    pub values: Vec<u64>,
    pub numerator: Vec<i64>,
    /// The last two values agree and lie past the degree of the numerator.
    pub stabilized: bool,
}

/// Graded Betti shifts of a resolution `0 <- R/a <- R <- F_0 <- F_1 <- F_2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiData {
    pub generator_shifts: Vec<u32>,
    pub syzygy_shifts_1: Vec<u32>,
    pub syzygy_shifts_2: Vec<u32>,
}

impl BettiData {
    pub fn regularity(&self) -> u32 {
        shifts_regularity(&[&self.generator_shifts, &self.syzygy_shifts_1, &self.syzygy_shifts_2])
    }

    pub fn numerator(&self) -> Vec<i64> {
        alternating_numerator(&[&self.generator_shifts, &self.syzygy_shifts_1, &self.syzygy_shifts_2])
    }
}

/// A claimed resolution, as `(shift, rank)` pairs per homological degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PredictedResolution {
    /// `steps[0]` describes the generators, `steps[1]` the first syzygies, ...
    pub steps: Vec<Vec<(u32, u32)>>,
    /// Closed-form multiplicity of `R/a`, when one is stated.
    pub multiplicity: Option<u64>,
}

impl PredictedResolution {
    pub fn new(steps: Vec<Vec<(u32, u32)>>) -> Self {
        let steps = steps
            .into_iter()
            .map(|s| s.into_iter().filter(|&(_, r)| r > 0).collect::<Vec<_>>())
            .collect();
        PredictedResolution { steps, multiplicity: None }
    }

    pub fn with_multiplicity(mut self, e: u64) -> Self {
        self.multiplicity = Some(e);
        self
    }

    /// Shifts at homological degree `i`, expanded with multiplicity and sorted.
    pub fn shifts(&self, i: usize) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .steps
            .get(i)
            .into_iter()
            .flatten()
            .flat_map(|&(s, r)| std::iter::repeat_n(s, r as usize))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn generator_count(&self) -> u64 {
        self.rank(0)
    }

    pub fn rank(&self, i: usize) -> u64 {
        self.steps.get(i).into_iter().flatten().map(|&(_, r)| r as u64).sum()
    }

    pub fn numerator(&self) -> Vec<i64> {
        let all: Vec<Vec<u32>> = (0..self.steps.len()).map(|i| self.shifts(i)).collect();
        let refs: Vec<&[u32]> = all.iter().map(Vec::as_slice).collect();
        alternating_numerator(&refs)
    }

    pub fn regularity(&self) -> u32 {
        let all: Vec<Vec<u32>> = (0..self.steps.len()).map(|i| self.shifts(i)).collect();
        let refs: Vec<&[u32]> = all.iter().map(Vec::as_slice).collect();
        shifts_regularity(&refs)
    }

    /// `1 - Σ_i (-1)^i rank F_i`, zero for any quotient of positive dimension.
    pub fn euler_characteristic(&self) -> i64 {
        1 + (0..self.steps.len())
            .map(|i| if i % 2 == 0 { -(self.rank(i) as i64) } else { self.rank(i) as i64 })
            .sum::<i64>()
    }

    /// Multiplicity implied by the shifts, for a one-dimensional quotient of `K[x,y,z]`.
    pub fn numerator_multiplicity(&self) -> Result<u64> {
        multiplicity_of_numerator(&self.numerator(), 3)
    }
}

fn shifts_regularity(steps: &[&[u32]]) -> u32 {
    steps
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.iter().max().map(|&m| m.saturating_sub(i as u32)))
        .max()
        .unwrap_or(0)
}

fn alternating_numerator(steps: &[&[u32]]) -> Vec<i64> {
    let top = steps.iter().flat_map(|s| s.iter()).copied().max().unwrap_or(0) as usize;
    let mut n = vec![0i64; top + 1];
    n[0] = 1;
    for (i, s) in steps.iter().enumerate() {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        for &d in s.iter() {
            n[d as usize] += sign;
        }
    }
    trim(n)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `R / (gens)` for a monomial ideal.
fn kpoly(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    let pairwise_coprime =
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(*b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    // pivot on the variable occurring in the most generators
    let var = (0..nvars)
        .max_by_key(|&i| (gens.iter().filter(|g| g.exponent(i) > 0).count(), std::cmp::Reverse(i)))
        .expect("nonempty");
    let x = Monomial::var(var);
    let mut plus: Vec<Monomial> = gens.iter().copied().filter(|g| g.exponent(var) == 0).collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(x).unwrap_or(*g)).collect();
    let a = kpoly(plus, nvars);
    let mut b = vec![0i64];
    b.extend(kpoly(colon, nvars));
    poly_add(&a, &b)
}

/// Series numerator `N(t)` of `R/a`.
pub fn numerator(a: &Ideal) -> Result<Vec<i64>> {
    let lms = a.initial_monomials()?;
    Ok(trim(kpoly(lms, a.ring().nvars())))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `HF(R/a, d)`, counting standard monomials of the initial ideal.
pub fn hilbert_function(a: &Ideal, d: u32) -> Result<u64> {
    let nv = a.ring().nvars() as u64;
    Ok(binomial(d as u64 + nv - 1, nv - 1) - a.graded_dim(d)?)
}

/// Hilbert function values through `deg N + 4`, plus the numerator.
pub fn hilbert_profile(a: &Ideal) -> Result<HilbertProfile> {
    let numerator = numerator(a)?;
    let top = numerator.len() as u32 - 1 + 4;
    if top > degree_cap() {
        return Err(Error::NoStabilization(degree_cap()));
    }
    let values: Vec<u64> = (0..=top).map(|d| hilbert_function(a, d)).collect::<Result<_>>()?;
    let stabilized = values[top as usize] == values[top as usize - 1];
    Ok(HilbertProfile { values, numerator, stabilized })
}

/// Divides by `(1 - t)` as often as possible, up to `limit` times.
fn strip_one_minus_t(n: &[i64], limit: usize) -> (Vec<i64>, usize) {
    let mut cur = trim(n.to_vec());
    let mut count = 0;
    while count < limit && cur.iter().sum::<i64>() == 0 && cur != vec![0] {
        // cur = (1 - t) q  =>  q_i = Σ_{j <= i} cur_j
        let mut q = Vec::with_capacity(cur.len() - 1);
        let mut s = 0;
        for &c in &cur[..cur.len() - 1] {
            s += c;
            q.push(s);
        }
        cur = trim(q);
        count += 1;
    }
    (cur, count)
}

fn multiplicity_of_numerator(n: &[i64], nvars: usize) -> Result<u64> {
    let (q, count) = strip_one_minus_t(n, nvars);
    if count != nvars - 1 {
        return Err(Error::Dimension(format!(
            "numerator has (1 - t)-adic order {count}, expected {}",
            nvars - 1
        )));
    }
    let e: i64 = q.iter().sum();
    if e <= 0 {
        return Err(Error::Dimension(format!("non-positive multiplicity {e}")));
    }
    Ok(e as u64)
}

/// Multiplicity of a one-dimensional quotient, `N''(1)/2` in three variables.
pub fn multiplicity(a: &Ideal) -> Result<u64> {
    multiplicity_of_numerator(&numerator(a)?, a.ring().nvars())
}

/// Multiplicity as the eventual value of the Hilbert function.
pub fn multiplicity_from_hilbert_function(a: &Ideal) -> Result<u64> {
    let p = hilbert_profile(a)?;
    if !p.stabilized {
        return Err(Error::Dimension("Hilbert function is not eventually constant".into()));
    }
    Ok(*p.values.last().expect("nonempty"))
}

/// Betti shifts of a perfect codimension-two ideal, recovered from its numerator.
pub fn betti_codim2(a: &Ideal) -> Result<BettiData> {
    let gens = a.minimal_generator_degrees()?;
    let n = numerator(a)?;
    let top = gens.iter().copied().max().unwrap_or(0) as usize;
    let mut s = n.clone();
    s.resize(s.len().max(top + 1), 0);
    s[0] -= 1;
    for &g in &gens {
        s[g as usize] += 1;
    }
    if let Some(d) = s.iter().position(|&c| c < 0) {
        return Err(Error::NotPerfectCodim2(format!("negative syzygy count in degree {d}")));
    }
    let total: i64 = s.iter().sum();
    if gens.is_empty() || total != gens.len() as i64 - 1 {
        return Err(Error::NotPerfectCodim2(format!(
            "{total} syzygies for {} generators",
            gens.len()
        )));
    }
    let syz: Vec<u32> =
        s.iter().enumerate().flat_map(|(d, &c)| std::iter::repeat_n(d as u32, c as usize)).collect();
    Ok(BettiData { generator_shifts: gens, syzygy_shifts_1: syz, syzygy_shifts_2: Vec::new() })
}

/// Numerator and minimal generator degrees both match the prediction.
pub fn numerator_consistent(a: &Ideal, predicted: &PredictedResolution) -> Result<bool> {
    if numerator(a)? != predicted.numerator() {
        return Ok(false);
    }
    Ok(a.minimal_generator_degrees()? == predicted.shifts(0))
}

/// `max_i (max shift_i - i)`: from the codimension-two resolution when the
/// ideal is perfect, else from `predicted` once it has been checked against
/// the numerator and generator degrees.
pub fn regularity(a: &Ideal, predicted: Option<&PredictedResolution>) -> Result<u32> {
    match betti_codim2(a) {
        Ok(b) => Ok(b.regularity()),
        Err(Error::NotPerfectCodim2(why)) => match predicted {
            Some(p) if numerator_consistent(a, p)? => Ok(p.regularity()),
            Some(_) => Err(Error::Unresolvable(format!("{why}; prediction does not match the numerator"))),
            None => Err(Error::Unresolvable(why)),
        },
        Err(e) => Err(e),
    }
}

/// Least degree of a nonzero element.
pub fn alpha(a: &Ideal) -> Result<u32> {
    a.initial_monomials()?
        .iter()
        .map(|m| m.degree())
        .min()
        .ok_or_else(|| Error::Parameter("alpha of the zero ideal".into()))
}

/// Largest degree of a minimal generator.
pub fn beta(a: &Ideal) -> Result<u32> {
    a.minimal_generator_degrees()?
        .last()
        .copied()
        .ok_or_else(|| Error::Parameter("beta of the zero ideal".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::linalg::monomials_of_degree;
    use crate::poly::{MonomialOrder, Ring};
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::xyz(PrimeField::new(10009, 3).unwrap())
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(&ring(), gens).unwrap()
    }

    fn fermat3() -> Ideal {
        ideal(&["x*y^3 - x*z^3", "y*z^3 - y*x^3", "z*x^3 - z*y^3"])
    }

    /// Third backward difference of HF values, the oracle for the numerator.
    fn third_difference(values: &[u64]) -> Vec<i64> {
        let mut v: Vec<i64> = values.iter().map(|&x| x as i64).collect();
        for _ in 0..3 {
            let mut prev = 0;
            for x in v.iter_mut() {
                let cur = *x;
                *x -= prev;
                prev = cur;
            }
        }
        v
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(hilbert_function(&Ideal::zero(&ring()), 2).unwrap(), 6);
        assert_eq!(hilbert_function(&Ideal::irrelevant(&ring()), 1).unwrap(), 0);
        for d in 4..12 {
            assert_eq!(hilbert_function(&fermat3(), d).unwrap(), 12);
        }
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(numerator(&Ideal::zero(&ring())).unwrap(), vec![1]);
        assert_eq!(numerator(&ideal(&["x"])).unwrap(), vec![1, -1]);
        assert_eq!(numerator(&fermat3()).unwrap(), vec![1, 0, 0, 0, -3, 0, 2]);
    }

    #[test]
    fn numerator_matches_finite_differences() {
        for i in [fermat3(), ideal(&["x^2", "x*y", "y^3 + z^3"]), fermat3().power(2).unwrap(), ideal(&["x*y*z"])] {
            let p = hilbert_profile(&i).unwrap();
            let mut diff = third_difference(&p.values);
            diff.truncate(p.numerator.len());
            assert_eq!(diff, p.numerator);
            assert!(third_difference(&p.values)[p.numerator.len()..].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&fermat3()).unwrap(), 12);
        assert_eq!(multiplicity_from_hilbert_function(&fermat3()).unwrap(), 12);
        let fg = ideal(&["y^3 - z^3", "z^3 - x^3"]).power(2).unwrap();
        assert_eq!(multiplicity(&fg).unwrap(), 27);
        assert_eq!(multiplicity_from_hilbert_function(&fg).unwrap(), 27);
        assert!(matches!(multiplicity(&ideal(&["x"])), Err(Error::Dimension(_))));
        assert!(matches!(multiplicity(&Ideal::irrelevant(&ring())), Err(Error::Dimension(_))));
    }

    #[test]
    fn codim2_betti() {
        let b = betti_codim2(&fermat3()).unwrap();
        assert_eq!(b.generator_shifts, vec![4, 4, 4]);
        assert_eq!(b.syzygy_shifts_1, vec![6, 6]);
        assert_eq!(b.numerator(), numerator(&fermat3()).unwrap());
        assert_eq!(b.regularity(), 5);
        assert!(matches!(betti_codim2(&fermat3().power(2).unwrap()), Err(Error::NotPerfectCodim2(_))));
    }

    #[test]
    fn predictions() {
        let i = fermat3();
        assert!(numerator_consistent(&i, &PredictedResolution::new(vec![vec![(4, 3)], vec![(6, 2)]])).unwrap());
        assert!(!numerator_consistent(&i, &PredictedResolution::new(vec![vec![(4, 3)], vec![(5, 2)]])).unwrap());
        let sq = i.power(2).unwrap();
        let pred = PredictedResolution::new(vec![vec![(8, 6)], vec![(10, 6)], vec![(12, 1)]]);
        assert_eq!(pred.euler_characteristic(), 0);
        assert!(numerator_consistent(&sq, &pred).unwrap());
        assert_eq!(regularity(&sq, Some(&pred)).unwrap(), 10);
        assert!(matches!(regularity(&sq, None), Err(Error::Unresolvable(_))));
        assert_eq!(alpha(&i).unwrap(), 4);
        assert_eq!(beta(&sq).unwrap(), 8);
    }

    #[test]
    fn monomial_kpoly_against_counting() {
        let r = Ring::new(["a", "b", "c", "d"], PrimeField::new(10009, 3).unwrap(), MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["a^2*b", "b^3*c", "a*c*d^2", "d^4", "a*b*c*d"]).unwrap();
        let n = numerator(&i).unwrap();
        // HS = N / (1 - t)^4; expand and compare with direct counts
        for d in 0..15u32 {
            let from_series: i64 = n
                .iter()
                .enumerate()
                .filter(|(j, _)| *j as u32 <= d)
                .map(|(j, &c)| c * binomial((d - j as u32) as u64 + 3, 3) as i64)
                .sum();
            let count = monomials_of_degree(4, d, MonomialOrder::GrevLex).len() as u64 - i.graded_dim(d).unwrap();
            assert_eq!(from_series, count as i64);
        }
    }
}
