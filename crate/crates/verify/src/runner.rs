//! Parameter plans, dual-prime execution and report assembly.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use fermat_core::fermat::FermatContext;
use fermat_core::{par, PrimeField};

use crate::checks::{self, CheckSpec, Outcome, REGISTRY};
use crate::report::{CheckResult, Params, Report, Status};

pub const TOOL: &str = "fermat-verify";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Quick,
    Ids(Vec<String>),
}

impl std::str::FromStr for Selection {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Selection::All),
            "quick" => Ok(Selection::Quick),
            _ => {
                let ids: Vec<String> = s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect();
                for id in &ids {
                    checks::find(id).with_context(|| format!("unknown check {id}"))?;
                }
                if ids.is_empty() {
                    bail!("empty check selection");
                }
                Ok(Selection::Ids(ids))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeChoice {
    /// The smallest two admissible primes above the default floor, per `n`.
    Auto,
    Fixed(u32, u32),
}

impl std::str::FromStr for PrimeChoice {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(PrimeChoice::Auto);
        }
        let parts: Vec<&str> = s.split(',').collect();
        let [a, b] = parts.as_slice() else {
            bail!("expected auto or p1,p2");
        };
        let (a, b) = (a.trim().parse()?, b.trim().parse()?);
        if a == b {
            bail!("the two primes must differ");
        }
        Ok(PrimeChoice::Fixed(a, b))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub ns: Vec<u32>,
    pub ks: Vec<u32>,
    pub primes: PrimeChoice,
    pub selection: Selection,
    /// Record measured wall time; otherwise `wall_ms` is 0 so reports are reproducible.
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(ns: Vec<u32>, ks: Vec<u32>, selection: Selection) -> SuiteConfig {
        SuiteConfig { ns, ks, primes: PrimeChoice::Auto, selection, timings: false }
    }
}

/// The two contexts a check runs against.
pub struct ContextPair {
    pub n: u32,
    pub contexts: [FermatContext; 2],
}

impl ContextPair {
    pub fn new(n: u32, primes: &PrimeChoice) -> Result<ContextPair> {
        let (a, b) = match *primes {
            PrimeChoice::Auto => {
                let a = PrimeField::auto(n)?;
                let b = a.next_admissible()?;
                (a, b)
            }
            PrimeChoice::Fixed(p, q) => (PrimeField::new(p, n)?, PrimeField::new(q, n)?),
        };
        Ok(ContextPair { n, contexts: [FermatContext::new(n, a)?, FermatContext::new(n, b)?] })
    }

    pub fn primes(&self) -> [u32; 2] {
        [self.contexts[0].field().modulus(), self.contexts[1].field().modulus()]
    }
}

fn with(n: u32, extra: &[(&'static str, u32)]) -> Params {
    let mut p: Params = extra.iter().copied().collect();
    p.insert("n", n);
    p
}

/// Parameter tuples for `check` at `n`.
pub fn plan(check: &CheckSpec, n: u32, ks: &[u32]) -> Vec<Params> {
    match check.number {
        1 => (2..=6).map(|t| with(n, &[("t", t)])).collect(),
        2 => (1..=5).map(|t| with(n, &[("t", t)])).collect(),
        3 => (1..=4).map(|t| with(n, &[("t", t)])).collect(),
        7 => (1..=3).map(|r| with(n, &[("r", r)])).collect(),
        8 => checks::c8_exponents(n).into_iter().map(|m| with(n, &[("m", m)])).collect(),
        9 => {
            let mut big: Vec<u32> = ks.iter().copied().filter(|&k| k >= 2).collect();
            if big.is_empty() {
                big.push(2);
            }
            big.into_iter().map(|k| with(n, &[("k", k)])).collect()
        }
        13 => ks.iter().flat_map(|&k| (1..=3 * k).map(move |j| with(n, &[("k", k), ("j", j)]))).collect(),
        _ if check.params.contains(&"k") => ks.iter().map(|&k| with(n, &[("k", k)])).collect(),
        _ => vec![with(n, &[])],
    }
}

fn sorted_unique(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn selected(selection: &Selection) -> Vec<&'static CheckSpec> {
    match selection {
        Selection::All => REGISTRY.iter().collect(),
        Selection::Quick => REGISTRY.iter().filter(|c| c.in_quick).collect(),
        Selection::Ids(ids) => {
            let mut out: Vec<&'static CheckSpec> = ids.iter().filter_map(|id| checks::find(id)).collect();
            out.sort_by_key(|c| c.number);
            out.dedup_by_key(|c| c.number);
            out
        }
    }
}

fn evaluate(check: &CheckSpec, ctx: &FermatContext, params: &Params) -> Outcome {
    match check.run(ctx, params) {
        Ok(o) => o,
        Err(e) => Outcome { status: Status::Fail, details: format!("error: {e:#}") },
    }
}

/// Run one check under both primes of `pair`.  Agreement is required: when
/// the two evaluations differ the result is a failure recording both.
pub fn run_on(check: &CheckSpec, pair: &ContextPair, params: &Params, timings: bool) -> Result<CheckResult> {
    for name in check.params {
        if !params.contains_key(name) {
            bail!("{} needs parameter {name}", check.id);
        }
    }
    let start = Instant::now();
    let primes = pair.primes();
    let (status, details) = if check.needs_plane_curves && pair.n < 3 {
        (Status::Skip, format!("needs n >= 3, got n = {}", pair.n))
    } else {
        let (a, b) = par::join(
            || evaluate(check, &pair.contexts[0], params),
            || evaluate(check, &pair.contexts[1], params),
        );
        if a == b {
            (a.status, a.details)
        } else {
            (
                Status::Fail,
                format!(
                    "primes disagree: p={} gives {} ({}); p={} gives {} ({})",
                    primes[0],
                    a.status.as_str(),
                    a.details,
                    primes[1],
                    b.status.as_str(),
                    b.details
                ),
            )
        }
    };
    let wall_ms = if timings { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(CheckResult { check_id: check.id, params: params.clone(), primes, status, details, wall_ms })
}

/// Run a single check by id with explicit parameters, which must include `n`.
pub fn run_check(id: &str, params: &Params, primes: &PrimeChoice) -> Result<CheckResult> {
    let check = checks::find(id).with_context(|| format!("unknown check {id}"))?;
    let n = *params.get("n").context("missing parameter n")?;
    let pair = ContextPair::new(n, primes)?;
    run_on(check, &pair, params, false)
}

/// Run the selected checks over the cartesian product of parameter ranges.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let ns = sorted_unique(&config.ns);
    let ks = match config.selection {
        Selection::Quick => vec![1],
        _ => sorted_unique(&config.ks),
    };
    if ns.is_empty() || ks.is_empty() || ks.contains(&0) {
        bail!("need at least one n and k >= 1");
    }
    let pairs: Vec<ContextPair> =
        ns.iter().map(|&n| ContextPair::new(n, &config.primes)).collect::<Result<_>>()?;
    let checks = selected(&config.selection);
    let mut jobs: Vec<(&CheckSpec, usize, Params)> = Vec::new();
    for check in &checks {
        for (i, pair) in pairs.iter().enumerate() {
            for p in plan(check, pair.n, &ks) {
                jobs.push((check, i, p));
            }
        }
    }
    jobs.sort_by(|a, b| {
        (a.0.number, a.2.get("n"), &a.2).cmp(&(b.0.number, b.2.get("n"), &b.2))
    });
    let results = par::map(&jobs, |(check, i, p)| run_on(check, &pairs[*i], p, config.timings));
    let results = results.into_iter().collect::<Result<Vec<_>>>()?;
    let fields: BTreeMap<u32, [u32; 2]> = pairs.iter().map(|p| (p.n, p.primes())).collect();
    Ok(Report { tool: TOOL, version: VERSION, fields, results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_selection_and_primes() {
        assert_eq!("quick".parse::<Selection>().unwrap(), Selection::Quick);
        assert_eq!("C1,C10".parse::<Selection>().unwrap(), Selection::Ids(vec!["C1".into(), "C10".into()]));
        assert!("C99".parse::<Selection>().is_err());
        assert_eq!("10009,10039".parse::<PrimeChoice>().unwrap(), PrimeChoice::Fixed(10009, 10039));
        assert!("7,7".parse::<PrimeChoice>().is_err());
    }

    #[test]
    fn plans() {
        let c9 = checks::find("C9").unwrap();
        assert_eq!(plan(c9, 3, &[1]), vec![with(3, &[("k", 2)])]);
        let c13 = checks::find("C13").unwrap();
        assert_eq!(plan(c13, 3, &[1, 2]).len(), 9);
        assert_eq!(plan(checks::find("C14").unwrap(), 4, &[1]), vec![with(4, &[])]);
    }

    #[test]
    fn single_check_and_errors() {
        let r = run_check("C1-detC", &with(3, &[("t", 3)]), &PrimeChoice::Auto).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.primes[0], 10009);
        assert!(run_check("C1-detC", &with(3, &[]), &PrimeChoice::Auto).is_err());
        assert!(run_check("C77", &with(3, &[("t", 3)]), &PrimeChoice::Auto).is_err());
        assert!(run_check("C1", &with(3, &[("t", 3)]), &PrimeChoice::Fixed(10007, 10009)).is_err());
    }

    #[test]
    fn n2_skips_pencil_checks() {
        let r = run_check("C4", &with(2, &[("k", 1)]), &PrimeChoice::Auto).unwrap();
        assert_eq!(r.status, Status::Skip);
        let r = run_check("C15", &with(2, &[]), &PrimeChoice::Auto).unwrap();
        assert_eq!(r.status, Status::Pass);
    }
}
