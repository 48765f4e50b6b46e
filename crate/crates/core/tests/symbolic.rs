//! Symbolic powers of the Fermat ideal against independent constructions.

use fermat_core::fermat::{FermatContext, ResolutionKind};
use fermat_core::{hilbert, Ideal, Monomial, Polynomial};

fn ctx(n: u32) -> FermatContext {
    FermatContext::auto(n).unwrap()
}

fn span(c: &FermatContext, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(c.ring(), gens).unwrap()
}

fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(Monomial::from_exponents(&[a, b, d - a - b]));
        }
    }
    out
}

/// `dim_K a_d` from the span of all monomial multiples of the generators.
fn graded_dim_by_rank(a: &Ideal, d: u32) -> usize {
    let p = a.ring().field().modulus() as u64;
    let cols = monomials(d);
    let index = |m: Monomial| cols.iter().position(|&c| c == m).unwrap();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in a.gens() {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for mu in monomials(d - e) {
            let mut row = vec![0u64; cols.len()];
            for &(m, c) in g.terms() {
                row[index(m.mul(mu))] = c.value() as u64;
            }
            rows.push(row);
        }
    }
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = modpow(rows[rank][col], p - 2, p);
        let prow: Vec<u64> = rows[rank].iter().map(|v| v * inv % p).collect();
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f != 0 {
                for (x, y) in rows[r].iter_mut().zip(&prow) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rows[rank] = prow;
        rank += 1;
    }
    rank
}

fn modpow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

#[test]
fn fold_order_does_not_matter() {
    let c = ctx(3);
    for m in 1..=4 {
        let [a, b, cc, d] = c.components().clone().map(|q| q.power(m).unwrap());
        let reversed = d.intersect(&cc).unwrap().intersect(&b).unwrap().intersect(&a).unwrap();
        assert!(reversed.equal(&c.symbolic_power(m).unwrap()).unwrap(), "m = {m}");
    }
}

#[test]
fn symbolic_power_is_saturated_ordinary_power() {
    for (n, m) in [(3, 2), (3, 3), (4, 2)] {
        let c = ctx(n);
        let sat = c.ordinary_power(m).unwrap().saturate_irrelevant().unwrap();
        assert!(sat.equal(&c.symbolic_power(m).unwrap()).unwrap(), "n={n} m={m}");
    }
}

#[test]
fn hilbert_function_matches_rank_oracle() {
    let c = ctx(3);
    let s = c.symbolic_power(3).unwrap();
    let gens = span(&c, c.thm_generators(1).unwrap());
    for d in 8..=16 {
        let total = ((d + 1) * (d + 2) / 2) as u64;
        let hf = hilbert::hilbert_function(&s, d).unwrap();
        assert_eq!(hf, total - graded_dim_by_rank(&gens, d) as u64, "d = {d}");
    }
    assert_eq!(hilbert::multiplicity(&s).unwrap(), 72);
}

#[test]
fn generator_families_k2() {
    let c = ctx(3);
    let thm = span(&c, c.thm_generators(2).unwrap());
    let compact = span(&c, c.compact_generators(2).unwrap());
    let s6 = c.symbolic_power(6).unwrap();
    assert_eq!(c.thm_generators(2).unwrap().len(), 19);
    assert!(thm.equal(&s6).unwrap());
    assert!(compact.equal(&s6).unwrap());
    assert_eq!(s6.minimal_generator_degrees().unwrap().len(), 19);

    let c4 = ctx(4);
    let s8 = c4.symbolic_power(8).unwrap();
    assert!(span(&c4, c4.compact_generators(2).unwrap()).equal(&s8).unwrap());
    assert!(span(&c4, c4.thm_generators(2).unwrap()).equal(&s8).unwrap());
}

#[test]
fn recursion_chain_n3_k2() {
    let c = ctx(3);
    let chain = c.xj_chain(2, 6).unwrap();
    for j in 1..=6u32 {
        let rec = c.recursion_ideal(2, j).unwrap();
        assert!(rec.equal(&c.recursion_intersection(2, j).unwrap()).unwrap(), "j = {j}");
        let minors = c.minors_ideal(&chain[j as usize]).unwrap();
        assert!(minors.equal(&rec).unwrap(), "minors j = {j}");
        let pred = c.predicted_resolution(ResolutionKind::SymbolicX { k: 2, j }).unwrap();
        assert!(hilbert::numerator_consistent(&rec, &pred).unwrap(), "resolution j = {j}");
    }
    assert!(c.minors_ideal(&chain[6]).unwrap().equal(&c.symbolic_power(6).unwrap()).unwrap());
}

#[test]
fn veronese_and_reduction_n3() {
    let c = ctx(3);
    let s3 = c.symbolic_power(3).unwrap();
    let s6 = c.symbolic_power(6).unwrap();
    assert!(s3.power(2).unwrap().equal(&s6).unwrap());
    let j = c.reduction_ideal().unwrap();
    assert!(s3.contains(&j).unwrap());
    assert!(j.product(&s3).unwrap().equal(&s6).unwrap());
}

#[test]
fn third_symbolic_power_escapes_the_square() {
    for n in [3, 4] {
        let c = ctx(n);
        let sq = c.ordinary_power(2).unwrap();
        let mingens = c.symbolic_power(3).unwrap().minimal_generators().unwrap();
        let outside = mingens.iter().filter(|g| !sq.member(g).unwrap()).count();
        assert!(outside > 0, "n = {n}");
        assert!(!sq.contains(&c.symbolic_power(3).unwrap()).unwrap(), "n = {n}");
    }
}

#[test]
fn symbolic_regularity_n3() {
    let c = ctx(3);
    for m in 2..=6 {
        let b = hilbert::betti_codim2(&c.symbolic_power(m).unwrap()).unwrap();
        assert_eq!(b.regularity(), 4 * m, "m = {m}");
    }
}

#[test]
fn alpha_beta() {
    for n in [3, 4] {
        let c = ctx(n);
        let s = c.symbolic_power(n).unwrap();
        assert_eq!(hilbert::alpha(&s).unwrap(), n * n);
        assert_eq!(hilbert::beta(&s).unwrap(), n * n + n);
    }
}
