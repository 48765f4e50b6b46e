//! Buchberger's algorithm with Gebauer–Möller pair management.
//!
//! Pairs are selected by sugar degree, then by the order of their lcm
//! (the normal strategy).  Sugar ignores the variables of an elimination
//! block, so `t*a + (1 - t)*b` is processed degree by degree in the base
//! variables just like homogeneous input.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::{inv_mod, mul_mod, FieldElement};
use crate::par;
use crate::poly::terms::{self, Term};
use crate::poly::{check_degree, Accumulator, Monomial, MonomialOrder, Polynomial, Ring};

/// A reduced Gröbner basis, optionally with cofactors over the input generators.
pub(crate) struct GbOutput {
    pub basis: Vec<Polynomial>,
    /// `cofactors[i][j]`: coefficient of input generator `j` in `basis[i]`.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a> {
    ring: &'a Arc<Ring>,
    p: u32,
    order: MonomialOrder,
    front: usize,
    polys: Vec<Vec<Term>>,
    lms: Vec<Monomial>,
    sugar: Vec<u32>,
    cofs: Option<Vec<Vec<Polynomial>>>,
    /// Indices of the current minimal basis, in insertion order.
    live: Vec<usize>,
    pairs: Vec<Pair>,
}

fn weighted_degree(m: Monomial, front: usize) -> u32 {
    m.degree() - (0..front).map(|i| m.exponent(i)).sum::<u32>()
}

fn poly_sugar(t: &[Term], front: usize) -> u32 {
    t.iter().map(|x| weighted_degree(x.0, front)).max().unwrap_or(0)
}

impl<'a> Engine<'a> {
    fn new(ring: &'a Arc<Ring>, track: Option<usize>) -> Self {
        let order = ring.order();
        let front = match order {
            MonomialOrder::BlockElim(k) => k,
            _ => 0,
        };
        Engine {
            ring,
            p: ring.field().modulus(),
            order,
            front,
            polys: Vec::new(),
            lms: Vec::new(),
            sugar: Vec::new(),
            cofs: track.map(|_| Vec::new()),
            live: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn find_reducer(&self, m: Monomial) -> Option<usize> {
        self.live.iter().copied().find(|&k| self.lms[k].divides(m))
    }

    /// Reduces `f` by the live basis. With `full`, tails are reduced too.
    /// Returns the remainder and, if tracking, the quotient terms per basis index.
    fn reduce(&self, f: &[Term], full: bool, track: bool) -> (Vec<Term>, Vec<(usize, Vec<Term>)>) {
        let mut acc = Accumulator::from_terms(f, self.p, self.order);
        let mut rem = Vec::new();
        let mut quot: FxHashMap<usize, Vec<Term>> = FxHashMap::default();
        while let Some((m, c)) = acc.pop_lead() {
            match self.find_reducer(m) {
                Some(k) => {
                    let qm = m.div(self.lms[k]).expect("reducer divides");
                    acc.sub_mul(c, qm, &self.polys[k][1..]);
                    if track {
                        quot.entry(k).or_default().push((qm, FieldElement(c)));
                    }
                }
                None => {
                    rem.push((m, FieldElement(c)));
                    if !full {
                        rem.extend(acc.into_sorted());
                        break;
                    }
                }
            }
        }
        let mut quot: Vec<(usize, Vec<Term>)> = quot.into_iter().collect();
        quot.sort_unstable_by_key(|q| q.0);
        (rem, quot)
    }

    fn combine_cofactors(&self, base: Vec<Polynomial>, quot: &[(usize, Vec<Term>)]) -> Result<Vec<Polynomial>> {
        let cofs = self.cofs.as_ref().expect("tracking");
        let mut out = base;
        for (k, q) in quot {
            let q = Polynomial::from_terms(self.ring, q.iter().copied());
            for (o, c) in out.iter_mut().zip(&cofs[*k]) {
                *o = o.checked_sub(&q.checked_mul(c)?)?;
            }
        }
        Ok(out)
    }

    /// Adds a nonzero, top-reduced polynomial and updates the pair set.
    fn insert(&mut self, mut h: Vec<Term>, sugar: u32, cof: Option<Vec<Polynomial>>) {
        let lc = h[0].1 .0;
        let mut cof = cof;
        if lc != 1 {
            let inv = inv_mod(lc, self.p);
            h = terms::scale(&h, inv, self.p);
            if let Some(c) = cof.as_mut() {
                for x in c.iter_mut() {
                    *x = x.scale(FieldElement(inv));
                }
            }
        }
        let idx = self.polys.len();
        let lm = h[0].0;
        self.polys.push(h);
        self.lms.push(lm);
        self.sugar.push(sugar);
        if let (Some(cofs), Some(c)) = (self.cofs.as_mut(), cof) {
            cofs.push(c);
        }
        self.update(idx);
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lms[i].lcm(self.lms[j]);
        let si = self.sugar[i] + weighted_degree(lcm, self.front) - weighted_degree(self.lms[i], self.front);
        let sj = self.sugar[j] + weighted_degree(lcm, self.front) - weighted_degree(self.lms[j], self.front);
        Pair { i, j, lcm, sugar: si.max(sj) }
    }

    /// Gebauer–Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.lms[h];
        let candidates: Vec<Pair> = self.live.iter().map(|&g| self.pair(g, h)).collect();

        // Chain criterion among the new pairs; coprime pairs survive this step only
        // to shield others, and are then dropped by the product criterion.
        let mut kept: Vec<Pair> = Vec::new();
        for (a, pa) in candidates.iter().enumerate() {
            let coprime = self.lms[pa.i].is_coprime(lm_h);
            let dominated = candidates[a + 1..].iter().any(|pb| pb.lcm.divides(pa.lcm))
                || kept.iter().any(|pb| pb.lcm.divides(pa.lcm));
            if coprime || !dominated {
                kept.push(*pa);
            }
        }
        let new_pairs: Vec<Pair> =
            kept.into_iter().filter(|pa| !self.lms[pa.i].is_coprime(lm_h)).collect();

        // Old pairs made redundant by h.
        let lms = &self.lms;
        self.pairs.retain(|pr| {
            !(lm_h.divides(pr.lcm)
                && lms[pr.i].lcm(lm_h) != pr.lcm
                && lms[pr.j].lcm(lm_h) != pr.lcm)
        });
        self.pairs.extend(new_pairs);

        self.live.retain(|&g| !lm_h.divides(lms[g]));
        self.live.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(pa.lcm, pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pr: &Pair) -> Vec<Term> {
        let mi = pr.lcm.div(self.lms[pr.i]).expect("lcm");
        let mj = pr.lcm.div(self.lms[pr.j]).expect("lcm");
        let a = terms::mul_term(&self.polys[pr.i][1..], mi, 1, self.p);
        let b = terms::mul_term(&self.polys[pr.j][1..], mj, 1, self.p);
        terms::sub(&a, &b, self.p, self.order)
    }

    fn spoly_cofactor(&self, pr: &Pair) -> Result<Vec<Polynomial>> {
        let cofs = self.cofs.as_ref().expect("tracking");
        let one = FieldElement::ONE;
        let mi = pr.lcm.div(self.lms[pr.i]).expect("lcm");
        let mj = pr.lcm.div(self.lms[pr.j]).expect("lcm");
        cofs[pr.i]
            .iter()
            .zip(&cofs[pr.j])
            .map(|(a, b)| a.mul_monomial(mi, one)?.checked_sub(&b.mul_monomial(mj, one)?))
            .collect()
    }

    fn run(mut self, gens: &[Polynomial]) -> Result<GbOutput> {
        let track = self.cofs.is_some();
        let m = gens.len();
        let mut inputs: Vec<usize> = (0..m).filter(|&i| !gens[i].is_zero()).collect();
        inputs.sort_by_key(|&i| (poly_sugar(gens[i].terms(), self.front), i));
        for i in inputs {
            let g = gens[i].terms();
            check_degree(gens[i].degree().unwrap_or(0))?;
            let (h, quot) = self.reduce(g, false, track);
            if h.is_empty() {
                continue;
            }
            let cof = if track {
                let mut base = vec![Polynomial::zero(self.ring); m];
                base[i] = Polynomial::one(self.ring);
                Some(self.combine_cofactors(base, &quot)?)
            } else {
                None
            };
            let s = poly_sugar(&h, self.front);
            self.insert(h, s, cof);
        }
        while let Some(pr) = self.next_pair() {
            check_degree(pr.lcm.degree())?;
            let s = self.spoly(&pr);
            let (h, quot) = self.reduce(&s, false, track);
            if h.is_empty() {
                continue;
            }
            let cof = if track {
                let base = self.spoly_cofactor(&pr)?;
                Some(self.combine_cofactors(base, &quot)?)
            } else {
                None
            };
            self.insert(h, pr.sugar, cof);
        }
        self.finish()
    }

    /// Interreduces the live elements into the reduced monic basis, sorted by
    /// ascending leading monomial.
    fn finish(self) -> Result<GbOutput> {
        let track = self.cofs.is_some();
        let mut live = self.live.clone();
        live.sort_by(|&a, &b| self.order.cmp(self.lms[a], self.lms[b]));
        let reduced: Vec<Result<(Vec<Term>, Option<Vec<Polynomial>>)>> = par::map(&live, |&k| {
            let g = &self.polys[k];
            let (tail, quot) = self.reduce(&g[1..], true, track);
            let mut out = Vec::with_capacity(tail.len() + 1);
            out.push(g[0]);
            out.extend(tail);
            let cof = if track {
                Some(self.combine_cofactors(self.cofs.as_ref().unwrap()[k].clone(), &quot)?)
            } else {
                None
            };
            Ok((out, cof))
        });
        let mut basis = Vec::with_capacity(live.len());
        let mut cofactors = track.then(Vec::new);
        for r in reduced {
            let (t, c) = r?;
            basis.push(Polynomial::from_sorted(self.ring, t));
            if let (Some(all), Some(c)) = (cofactors.as_mut(), c) {
                all.push(c);
            }
        }
        Ok(GbOutput { basis, cofactors })
    }
}

/// Reduced Gröbner basis of `gens` in the order of `ring`.
pub(crate) fn groebner(ring: &Arc<Ring>, gens: &[Polynomial], track: bool) -> Result<GbOutput> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    Engine::new(ring, track.then_some(gens.len())).run(gens)
}

/// Full normal form of `f` with respect to a Gröbner basis (monic, any order
/// of elements), plus quotients when `track` is set.
pub(crate) fn normal_form(
    basis: &[Polynomial],
    f: &Polynomial,
    track: bool,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let ring = f.ring();
    let p = ring.field().modulus();
    let order = ring.order();
    let mut acc = Accumulator::from_terms(f.terms(), p, order);
    let mut rem = Vec::new();
    let mut quot: Vec<Vec<Term>> = vec![Vec::new(); if track { basis.len() } else { 0 }];
    while let Some((m, c)) = acc.pop_lead() {
        let hit = basis.iter().position(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match hit {
            Some(k) => {
                let g = basis[k].terms();
                let (lm, lc) = g[0];
                let qc = mul_mod(c, inv_mod(lc.0, p), p);
                let qm = m.div(lm).expect("divides");
                acc.sub_mul(qc, qm, &g[1..]);
                if track {
                    quot[k].push((qm, FieldElement(qc)));
                }
            }
            None => rem.push((m, FieldElement(c))),
        }
    }
    let quotients = track.then(|| quot.into_iter().map(|q| Polynomial::from_sorted(ring, q)).collect());
    (Polynomial::from_sorted(ring, rem), quotients)
}
