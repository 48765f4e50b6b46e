//! The check registry: one executable verification per stated identity.
//!
//! Every check runs against a single [`FermatContext`] and reports an
//! [`Outcome`] whose details never mention field elements, so the two
//! primes of a run can be compared by string equality.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use fermat_core::fermat::{block_c, block_h, vector_e, FermatContext, ResolutionKind};
use fermat_core::hilbert::{self, PredictedResolution};
use fermat_core::{Ideal, PolyMatrix, Polynomial};

use crate::report::{Params, Status};

/// Status and prime-independent details of one evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub details: String,
}

impl Outcome {
    fn new(status: Status, details: impl Into<String>) -> Outcome {
        Outcome { status, details: details.into() }
    }

    fn verdict(ok: bool, details: impl Into<String>) -> Outcome {
        Outcome::new(if ok { Status::Pass } else { Status::Fail }, details)
    }
}

type CheckFn = fn(&FermatContext, &Params) -> Result<Outcome>;

pub struct CheckSpec {
    pub id: &'static str,
    /// Numeric part of the id, used for report ordering.
    pub number: u32,
    pub claim: &'static str,
    /// The stated identity this check executes, quoted.
    pub anchor: &'static str,
    /// Parameter names besides `n`.
    pub params: &'static [&'static str],
    /// Needs the pencil machinery, which is undefined for `n = 2`.
    pub needs_plane_curves: bool,
    pub in_quick: bool,
    run: CheckFn,
}

impl CheckSpec {
    pub fn run(&self, ctx: &FermatContext, params: &Params) -> Result<Outcome> {
        (self.run)(ctx, params)
    }
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).finish_non_exhaustive()
    }
}

pub static REGISTRY: &[CheckSpec] = &[
    CheckSpec {
        id: "C1-detC",
        number: 1,
        claim: "det C(a,b)_t = a^t - b^t for 2 <= t <= 6",
        anchor: "det C(a,b)_t =a^t−b^t",
        params: &["t"],
        needs_plane_curves: false,
        in_quick: true,
        run: c1_det_c,
    },
    CheckSpec {
        id: "C2-minorsH",
        number: 2,
        claim: "I_t(H(a,b)_t) = (a,b)^t for 1 <= t <= 5",
        anchor: "I_t(H(a,b)_t)=(a,b)^{t}",
        params: &["t"],
        needs_plane_curves: false,
        in_quick: true,
        run: c2_minors_h,
    },
    CheckSpec {
        id: "C3-threedet",
        number: 3,
        claim: "the three block determinant families, every j",
        anchor: "(−1)^t f^{t-j+1} g^{j-1}",
        params: &["t"],
        needs_plane_curves: false,
        in_quick: true,
        run: c3_three_det,
    },
    CheckSpec {
        id: "C4-X3",
        number: 4,
        claim: "minors of X3 = four-summand ideal = intersection; numerator matches the stated resolution",
        anchor: "The ideal of maximal minors of $\\mathbf{X}_{3}$",
        params: &["k"],
        needs_plane_curves: true,
        in_quick: true,
        run: c4_x3,
    },
    CheckSpec {
        id: "C5-gens",
        number: 5,
        claim: "listed generators = compact generators = I^(nk)",
        anchor: "has the following set of minimal generators",
        params: &["k"],
        needs_plane_curves: true,
        in_quick: true,
        run: c5_gens,
    },
    CheckSpec {
        id: "C6-recursion",
        number: 6,
        claim: "recursion ideals equal the intersections for 1 <= j <= 3k; S_j determinant targets hold",
        anchor: "Such column vectors S_j do exist",
        params: &["k"],
        needs_plane_curves: true,
        in_quick: false,
        run: c6_recursion,
    },
    CheckSpec {
        id: "C7-reg-ordinary",
        number: 7,
        claim: "I^r has the stated resolution and C(r+2,2) generators",
        anchor: "minimal free resolutions of the ordinary powers",
        params: &["r"],
        needs_plane_curves: false,
        in_quick: true,
        run: c7_reg_ordinary,
    },
    CheckSpec {
        id: "C8-reg-symbolic",
        number: 8,
        claim: "reg I^(m) = m(n+1) in the proven range",
        anchor: "\\reg(I^{(m)})=m(n+1)",
        params: &["m"],
        needs_plane_curves: true,
        in_quick: false,
        run: c8_reg_symbolic,
    },
    CheckSpec {
        id: "C9-veronese",
        number: 9,
        claim: "I^(nk) = (I^(n))^k",
        anchor: "I^{(nk)}={I^{(n)}}^k",
        params: &["k"],
        needs_plane_curves: true,
        in_quick: false,
        run: c9_veronese,
    },
    CheckSpec {
        id: "C10-noncontainment",
        number: 10,
        claim: "some minimal generator of I^(3) lies outside I^2",
        anchor: "I^{(3)}\\not\\subseteq I^2",
        params: &[],
        needs_plane_curves: true,
        in_quick: true,
        run: c10_noncontainment,
    },
    CheckSpec {
        id: "C11-reduction",
        number: 11,
        claim: "J is contained in I^(n) and J I^(n) = I^(2n)",
        anchor: "the reduction number of I with respect to J is 1",
        params: &[],
        needs_plane_curves: true,
        in_quick: false,
        run: c11_reduction,
    },
    CheckSpec {
        id: "C12-alphabeta",
        number: 12,
        claim: "alpha(I^(nk)) = n^2 k and beta(I^(n)) = n^2 + n",
        anchor: "α_n=α(I^{(n)})=n^2",
        params: &["k"],
        needs_plane_curves: true,
        in_quick: true,
        run: c12_alpha_beta,
    },
    CheckSpec {
        id: "C13-multiplicity",
        number: 13,
        claim: "multiplicity of I(X_j) matches the closed form",
        anchor: "n^2\\binom{k(n-3)+j +1}{2}",
        params: &["k", "j"],
        needs_plane_curves: true,
        in_quick: false,
        run: c13_multiplicity,
    },
    CheckSpec {
        id: "C14-syzygy",
        number: 14,
        claim: "syzygies of I have degrees 2 and n-1; Rees equations have bidegrees (n+3,1), (2n,1)",
        anchor: "deg P_i=2 and \\deg Q_i=n-1",
        params: &[],
        needs_plane_curves: false,
        in_quick: true,
        run: c14_syzygy,
    },
    CheckSpec {
        id: "C15-hilbert-burch",
        number: 15,
        claim: "the 2x2 minors of the syzygy matrix regenerate I",
        anchor: "by the Hilbert-Burch theorem",
        params: &[],
        needs_plane_curves: false,
        in_quick: true,
        run: c15_hilbert_burch,
    },
];

/// Look up a check by full id (`C10-noncontainment`) or short id (`C10`).
pub fn find(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id) || c.id.split('-').next().is_some_and(|s| s.eq_ignore_ascii_case(id)))
}

fn param(p: &Params, name: &str) -> Result<u32> {
    p.get(name).copied().with_context(|| format!("missing parameter {name}"))
}

fn binom(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

fn pair_ideal(ctx: &FermatContext, a: &Polynomial, b: &Polynomial, t: u32) -> Result<Ideal> {
    Ok(Ideal::new(ctx.ring(), vec![a.clone(), b.clone()])?.power(t)?)
}

/// `c * a` for a principal multiplier `c`.
fn times(c: &Polynomial, a: &Ideal) -> Result<Ideal> {
    let gens = a.gens().iter().map(|g| c.checked_mul(g)).collect::<fermat_core::Result<Vec<_>>>()?;
    Ok(Ideal::new(a.ring(), gens)?)
}

fn shifts_text(v: &[u32]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < v.len() {
        let run = v[i..].iter().take_while(|&&s| s == v[i]).count();
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "{}^{}", v[i], run);
        i += run;
    }
    format!("{{{out}}}")
}

fn c1_det_c(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let t = param(p, "t")?;
    let (x, y) = (ctx.var(0), ctx.var(1));
    let det = block_c(&x, &y, t as usize)?.determinant()?;
    let want = x.pow(t)?.checked_sub(&y.pow(t)?)?;
    let pencil = block_c(ctx.f(), ctx.g(), t as usize)?.determinant()?;
    let want_fg = ctx.f().pow(t)?.checked_sub(&ctx.g().pow(t)?)?;
    Ok(Outcome::verdict(
        det == want && pencil == want_fg,
        format!("det C(x,y)_{t} = x^{t} - y^{t}: {}; det C(f,g)_{t} = f^{t} - g^{t}: {}", det == want, pencil == want_fg),
    ))
}

fn c2_minors_h(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let t = param(p, "t")?;
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, a, b) in [("x,y", ctx.var(0), ctx.var(1)), ("f,g", ctx.f().clone(), ctx.g().clone())] {
        let minors = Ideal::new(ctx.ring(), block_h(&a, &b, t as usize)?.maximal_minors()?)?;
        let eq = minors.equal(&pair_ideal(ctx, &a, &b, t)?)?;
        ok &= eq;
        parts.push(format!("I_{t}(H({name})_{t}) = ({name})^{t}: {eq}"));
    }
    Ok(Outcome::verdict(ok, parts.join("; ")))
}

/// `det [H(f,g)_t | v]` for `v` a unit column `e_j`, or `E_j` placed at the
/// bottom or at the top of the column.
fn c3_three_det(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let t = param(p, "t")? as usize;
    let (f, g, h) = (ctx.f(), ctx.g(), ctx.h());
    let ring = ctx.ring();
    let signed = |q: Polynomial, e: usize| if e.is_multiple_of(2) { q } else { q.scale(ring.field().elem(-1)) };
    let hm = block_h(f, g, t)?;
    let tt = t as u32;
    let mut cases: Vec<(String, PolyMatrix, Polynomial)> = Vec::new();
    for j in 1..=t + 1 {
        let mut col = PolyMatrix::zeros(ring, t + 1, 1);
        col.set(j - 1, 0, Polynomial::one(ring));
        let want = signed(f.pow(tt + 1 - j as u32)?.checked_mul(&g.pow(j as u32 - 1)?)?, t);
        cases.push((format!("e_{j}"), col, want));
    }
    for j in 0..=t {
        let e = vector_e(j, ring)?;
        let jj = j as u32;
        let mut bottom = PolyMatrix::zeros(ring, t + 1, 1);
        bottom.set_block(t - j, 0, &e)?;
        cases.push((format!("bottom E_{j}"), bottom, signed(g.pow(tt - jj)?.checked_mul(&h.pow(jj)?)?, t - j)));
        let mut top = PolyMatrix::zeros(ring, t + 1, 1);
        top.set_block(0, 0, &e)?;
        cases.push((format!("top E_{j}"), top, signed(f.pow(tt - jj)?.checked_mul(&h.pow(jj)?)?, t - j)));
    }
    let total = cases.len();
    let mut bad = Vec::new();
    for (name, col, want) in cases {
        if hm.hconcat(&col)?.determinant()? != want {
            bad.push(name);
        }
    }
    if bad.is_empty() {
        Ok(Outcome::verdict(true, format!("all {total} determinants of [H(f,g)_{t} | v] match")))
    } else {
        Ok(Outcome::verdict(false, format!("mismatch for {}", bad.join(", "))))
    }
}

/// The four-summand ideal stated for the minors of `X3`.
fn x3_sum_ideal(ctx: &FermatContext, k: u32) -> Result<Ideal> {
    let n = ctx.n();
    let (x, y, z) = (ctx.var(0), ctx.var(1), ctx.var(2));
    let a = (k - 1) * (n - 3) + 2;
    let mut acc = times(&ctx.fgh_power(1, 1, 1)?, &pair_ideal(ctx, ctx.f(), ctx.g(), k * (n - 3))?)?;
    let terms = [
        (ctx.fgh_power(a, n - 2, 0)?.checked_mul(&x)?, pair_ideal(ctx, &x, &y, n - 1)?),
        (ctx.fgh_power(0, a, n - 2)?.checked_mul(&y)?, pair_ideal(ctx, &y, &z, n - 1)?),
        (ctx.fgh_power(n - 2, 0, a)?.checked_mul(&z)?, pair_ideal(ctx, &z, &x, n - 1)?),
    ];
    for (c, line) in terms {
        acc = acc.sum(&times(&c, &line)?)?;
    }
    Ok(acc)
}

fn c4_x3(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let k = param(p, "k")?;
    let x3 = ctx.build_x3(k)?;
    let minors = ctx.minors_ideal(&x3)?;
    let sum = x3_sum_ideal(ctx, k)?;
    let inter = ctx.recursion_intersection(k, 3)?;
    let pred = ctx.predicted_resolution(ResolutionKind::SymbolicX { k, j: 3 })?;
    let eq_sum = minors.equal(&sum)?;
    let eq_inter = minors.equal(&inter)?;
    let numer = hilbert::numerator_consistent(&minors, &pred)?;
    Ok(Outcome::verdict(
        eq_sum && eq_inter && numer,
        format!(
            "X3 is {}x{}; minors = sum: {eq_sum}; minors = intersection: {eq_inter}; resolution {} -> {} consistent: {numer}",
            x3.rows(),
            x3.cols(),
            shifts_text(&pred.shifts(0)),
            shifts_text(&pred.shifts(1)),
        ),
    ))
}

fn c5_gens(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let k = param(p, "k")?;
    let n = ctx.n();
    let target = ctx.symbolic_power(n * k)?;
    let thm = Ideal::new(ctx.ring(), ctx.thm_generators(k)?)?;
    let compact = Ideal::new(ctx.ring(), ctx.compact_generators(k)?)?;
    let listed = thm.gens().len();
    let eq_thm = thm.equal(&target)?;
    let eq_compact = compact.equal(&target)?;
    let mu = target.minimal_generator_degrees()?.len();
    let counted = (k * (n - 3) + 1 + 3 * k * n) as usize;
    let stated = (k * n + 1) as usize;
    let details = format!(
        "listed = I^({}): {eq_thm}; compact = I^({}): {eq_compact}; {listed} listed, mu = {mu}, rank count k(n-3)+1+3kn = {counted}, proof text states kn+1 = {stated}",
        n * k,
        n * k
    );
    if !(eq_thm && eq_compact && mu == listed && mu == counted) {
        return Ok(Outcome::new(Status::Fail, details));
    }
    let status = if stated == mu { Status::Pass } else { Status::PaperDiscrepancy };
    Ok(Outcome::new(status, details))
}

fn c6_recursion(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let k = param(p, "k")?;
    let mut bad = Vec::new();
    for j in 1..=3 * k {
        if !ctx.recursion_ideal(k, j)?.equal(&ctx.recursion_intersection(k, j)?)? {
            bad.push(format!("recursion j={j}"));
        }
    }
    // chain up to 3k; each lifted column is re-checked here independently
    let chain = ctx.xj_chain(k, 3 * k)?;
    let mut targets = 0;
    for j in 4..=3 * k {
        let xj = &chain[j as usize];
        let base = &chain[j as usize - 3];
        // S_j is the top of the first new column of X_j
        let s = xj.submatrix(0, chain[j as usize - 1].cols(), base.rows(), 1)?;
        if base.hconcat(&s)?.determinant()? != ctx.s_target(k, j)? {
            bad.push(format!("det [X_{} | S_{j}]", j - 3));
        }
        targets += 1;
        if !ctx.minors_ideal(xj)?.equal(&ctx.recursion_intersection(k, j)?)? {
            bad.push(format!("minors X_{j}"));
        }
    }
    if bad.is_empty() {
        Ok(Outcome::verdict(
            true,
            format!("j = 1..{}: recursion = intersection; {targets} lifted S_j determinant targets verified", 3 * k),
        ))
    } else {
        Ok(Outcome::verdict(false, format!("failed: {}", bad.join(", "))))
    }
}

fn c7_reg_ordinary(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let r = param(p, "r")?;
    let n = ctx.n();
    let power = ctx.ordinary_power(r)?;
    let pred = ctx.predicted_resolution(ResolutionKind::Ordinary { r })?;
    let consistent = hilbert::numerator_consistent(&power, &pred)?;
    let mu = power.minimal_generator_degrees()?.len() as u64;
    let want_mu = binom(r as u64 + 2, 2);
    let base = format!("numerator consistent: {consistent}; mu = {mu} (C(r+2,2) = {want_mu})");
    if !consistent || mu != want_mu {
        return Ok(Outcome::new(Status::Fail, base));
    }
    if r == 1 {
        let computed = hilbert::betti_codim2(&power)?.regularity();
        let stated = 2 * n;
        let status = if computed == stated { Status::Pass } else { Status::PaperDiscrepancy };
        return Ok(Outcome::new(status, format!("{base}; reg computed {computed}, stated {stated}")));
    }
    let computed = hilbert::regularity(&power, Some(&pred))?;
    let stated = r * n + r + n - 1;
    Ok(Outcome::verdict(computed == stated, format!("{base}; reg computed {computed}, stated rn+r+n-1 = {stated}")))
}

/// Which statement covers `reg I^(m)`: `None` marks the conjectural range.
fn c8_claim(n: u32, m: u32) -> Option<&'static str> {
    if m + 3 * n >= n * n + 2 {
        Some("Frobenius range")
    } else if m == n {
        Some("m = n")
    } else if m + 1 == n {
        Some("m = n-1")
    } else {
        None
    }
}

/// Check parameters for the symbolic regularity check at `n`.
pub fn c8_exponents(n: u32) -> Vec<u32> {
    (n.saturating_sub(2).max(2)..=2 * n).collect()
}

fn c8_reg_symbolic(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let m = param(p, "m")?;
    let n = ctx.n();
    let ideal = ctx.symbolic_power(m)?;
    let reg = hilbert::regularity(&ideal, None)?;
    let want = m * (n + 1);
    let Some(claim) = c8_claim(n, m) else {
        return Ok(Outcome::new(
            Status::Skip,
            format!("conjectural range, reported only: reg computed {reg}, m(n+1) = {want}, agree: {}", reg == want),
        ));
    };
    let mut details = format!("{claim}: reg computed {reg}, m(n+1) = {want}");
    let mut ok = reg == want;
    if m + 1 == n && n >= 4 {
        let x = ctx.build_x3_prime()?;
        let minors = ctx.minors_ideal(&x)?;
        let pred = ctx.predicted_resolution(ResolutionKind::X3Prime)?;
        let eq = minors.equal(&ideal)?;
        let consistent = hilbert::numerator_consistent(&minors, &pred)?;
        let via = pred.regularity();
        ok &= eq && consistent && via == n * n - 1;
        let _ = write!(
            details,
            "; X3' {}x{} minors = I^({m}): {eq}; resolution consistent: {consistent}; reg via X3' {via} (n^2-1 = {})",
            x.rows(),
            x.cols(),
            n * n - 1
        );
    }
    Ok(Outcome::verdict(ok, details))
}

fn c9_veronese(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let k = param(p, "k")?;
    let n = ctx.n();
    let lhs = ctx.symbolic_power(n * k)?;
    let rhs = ctx.symbolic_power(n)?.power(k)?;
    let eq = lhs.equal(&rhs)?;
    Ok(Outcome::verdict(eq, format!("I^({}) = (I^({n}))^{k}: {eq}", n * k)))
}

/// Is `f` a minimal generator of the homogeneous ideal `a`?
fn is_minimal_generator(a: &Ideal, f: &Polynomial) -> Result<bool> {
    let d = f.degree().context("zero polynomial")?;
    let lower: Vec<Polynomial> =
        a.groebner()?.iter().filter(|g| g.degree().is_some_and(|e| e < d)).cloned().collect();
    if lower.is_empty() {
        return Ok(true);
    }
    Ok(!Ideal::new(a.ring(), lower)?.member(f)?)
}

fn c10_noncontainment(ctx: &FermatContext, _p: &Params) -> Result<Outcome> {
    let s3 = ctx.symbolic_power(3)?;
    let sq = ctx.ordinary_power(2)?;
    let fgh = ctx.fgh_power(1, 1, 1)?;
    if s3.member(&fgh)? && is_minimal_generator(&s3, &fgh)? && !sq.member(&fgh)? {
        return Ok(Outcome::verdict(
            true,
            format!("witness f*g*h (degree {}) is a minimal generator of I^(3) outside I^2", 3 * ctx.n()),
        ));
    }
    for (i, g) in s3.minimal_generators()?.iter().enumerate() {
        if !sq.member(g)? {
            let lead = g.leading_monomial().map(|m| m.exponents(3)).unwrap_or_default();
            return Ok(Outcome::verdict(
                true,
                format!(
                    "witness: minimal generator #{i} of I^(3), degree {}, leading monomial x^{} y^{} z^{}, outside I^2",
                    g.degree().unwrap_or(0),
                    lead[0],
                    lead[1],
                    lead[2]
                ),
            ));
        }
    }
    Ok(Outcome::verdict(false, "every minimal generator of I^(3) lies in I^2"))
}

fn c11_reduction(ctx: &FermatContext, _p: &Params) -> Result<Outcome> {
    let n = ctx.n();
    let j = ctx.reduction_ideal()?;
    let sn = ctx.symbolic_power(n)?;
    let contained = sn.contains(&j)?;
    let eq = j.product(&sn)?.equal(&ctx.symbolic_power(2 * n)?)?;
    let degs: Vec<String> = j.gens().iter().map(|g| g.degree().unwrap_or(0).to_string()).collect();
    Ok(Outcome::verdict(
        contained && eq,
        format!("J generated in degrees [{}]; J in I^({n}): {contained}; J I^({n}) = I^({}): {eq}", degs.join(","), 2 * n),
    ))
}

fn c12_alpha_beta(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let k = param(p, "k")?;
    let n = ctx.n();
    let alpha = hilbert::alpha(&ctx.symbolic_power(n * k)?)?;
    let beta = hilbert::beta(&ctx.symbolic_power(n)?)?;
    Ok(Outcome::verdict(
        alpha == n * n * k && beta == n * n + n,
        format!("alpha(I^({})) = {alpha} (n^2 k = {}); beta(I^({n})) = {beta} (n^2+n = {})", n * k, n * n * k, n * n + n),
    ))
}

/// Closed-form multiplicity of `I(X_j)`, from the stated case split.
pub fn stated_multiplicity(n: u32, k: u32, j: u32) -> u64 {
    let (n, k, j) = (n as u64, k as u64, j as u64);
    let (i, r) = ((j - 1) / 3, (j - 1) % 3 + 1);
    let low = binom(i * n + 1, 2);
    let high = binom((i + 1) * n + 1, 2);
    let tail = match r {
        1 => 2 * low + high,
        2 => low + 2 * high,
        _ => 3 * high,
    };
    n * n * binom(k * (n - 3) + j + 1, 2) + tail
}

fn c13_multiplicity(ctx: &FermatContext, p: &Params) -> Result<Outcome> {
    let (k, j) = (param(p, "k")?, param(p, "j")?);
    if j == 0 || j > 3 * k {
        bail!("j = {j} outside 1..=3k");
    }
    let ideal = ctx.recursion_intersection(k, j)?;
    let by_numerator = hilbert::multiplicity(&ideal)?;
    let by_hf = hilbert::multiplicity_from_hilbert_function(&ideal)?;
    let stated = stated_multiplicity(ctx.n(), k, j);
    Ok(Outcome::verdict(
        by_numerator == stated && by_hf == stated,
        format!("e by numerator {by_numerator}, by Hilbert function {by_hf}, closed form {stated}"),
    ))
}

fn c14_syzygy(ctx: &FermatContext, _p: &Params) -> Result<Outcome> {
    let n = ctx.n();
    let m = ctx.syzygy_matrix()?;
    let mut degs: Vec<u32> = (0..2)
        .map(|c| m.column(c).iter().find_map(Polynomial::degree))
        .collect::<Option<Vec<_>>>()
        .context("zero syzygy column")?;
    degs.sort_unstable();
    let low = ctx.syzygies_in_degree(degs[0])?.len();
    let below = if degs[0] > 0 { ctx.syzygies_in_degree(degs[0] - 1)?.len() } else { 0 };
    let want = {
        let mut w = vec![2, n - 1];
        w.sort_unstable();
        w
    };
    let rees: Vec<(u32, u32)> = degs.iter().map(|&d| (n + 1 + d, 1)).collect();
    let mut want_rees = vec![(n + 3, 1), (2 * n, 1)];
    want_rees.sort_unstable();
    let ok = degs == want && below == 0 && low == if degs[0] == degs[1] { 2 } else { 1 } && rees == want_rees;
    Ok(Outcome::verdict(
        ok,
        format!(
            "syzygy degrees {degs:?} (want {want:?}); {low} syzygies in degree {}, none below; Rees bidegrees {rees:?}",
            degs[0]
        ),
    ))
}

fn c15_hilbert_burch(ctx: &FermatContext, _p: &Params) -> Result<Outcome> {
    let m = ctx.syzygy_matrix()?;
    let minors = ctx.minors_ideal(&m)?;
    let eq = minors.equal(ctx.ideal())?;
    let degs: Vec<String> = minors.gens().iter().map(|g| g.degree().unwrap_or(0).to_string()).collect();
    Ok(Outcome::verdict(eq, format!("3x2 syzygy matrix; minors of degrees [{}] generate I: {eq}", degs.join(","))))
}

/// The predicted resolution behind a check, if any; exposed for the CLI.
pub fn predicted_for_power(ctx: &FermatContext, ordinary: bool, e: u32) -> Result<Option<PredictedResolution>> {
    let n = ctx.n();
    if ordinary {
        return Ok(Some(ctx.predicted_resolution(ResolutionKind::Ordinary { r: e })?));
    }
    if n >= 3 && e.is_multiple_of(n) {
        let k = e / n;
        return Ok(Some(ctx.predicted_resolution(ResolutionKind::SymbolicX { k, j: 3 * k })?));
    }
    if n >= 4 && e + 1 == n {
        return Ok(Some(ctx.predicted_resolution(ResolutionKind::X3Prime)?));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u32) -> FermatContext {
        FermatContext::auto(n).unwrap()
    }

    fn params(pairs: &[(&'static str, u32)]) -> Params {
        pairs.iter().copied().collect()
    }

    #[test]
    fn registry_ids_are_unique_and_ordered() {
        for (i, c) in REGISTRY.iter().enumerate() {
            assert_eq!(c.number as usize, i + 1);
            assert!(c.id.starts_with(&format!("C{}-", c.number)));
        }
        assert_eq!(find("c10").unwrap().id, "C10-noncontainment");
        assert_eq!(find("C1-detC").unwrap().number, 1);
        assert!(find("C16").is_none());
    }

    #[test]
    fn c1_example() {
        let out = find("C1").unwrap().run(&ctx(3), &params(&[("t", 3)])).unwrap();
        assert_eq!(out.status, Status::Pass);
    }

    #[test]
    fn c7_r1_is_flagged() {
        let out = find("C7").unwrap().run(&ctx(3), &params(&[("r", 1)])).unwrap();
        assert_eq!(out.status, Status::PaperDiscrepancy);
        assert!(out.details.contains("reg computed 5, stated 6"), "{}", out.details);
    }

    #[test]
    fn c8_ranges() {
        assert_eq!(c8_claim(3, 2), Some("Frobenius range"));
        assert_eq!(c8_claim(4, 3), Some("m = n-1"));
        assert_eq!(c8_claim(4, 5), None);
        assert_eq!(c8_claim(4, 6), Some("Frobenius range"));
        assert_eq!(c8_exponents(3), vec![2, 3, 4, 5, 6]);
        assert_eq!(c8_exponents(4), vec![2, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn closed_form_multiplicities() {
        // n = 3, k = 1, j = 3: 9 C(4,2) + 3 C(4,2)
        assert_eq!(stated_multiplicity(3, 1, 3), 72);
        assert_eq!(stated_multiplicity(4, 1, 3), 190);
    }

    #[test]
    fn witness_is_named() {
        let out = find("C10").unwrap().run(&ctx(3), &Params::new()).unwrap();
        assert_eq!(out.status, Status::Pass);
        assert!(out.details.contains("f*g*h"));
    }

    #[test]
    fn missing_parameter() {
        assert!(find("C4").unwrap().run(&ctx(3), &Params::new()).is_err());
    }
}
