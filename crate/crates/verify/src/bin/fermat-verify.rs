use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fermat_core::fermat::FermatContext;
use fermat_core::{hilbert, par};
use fermat_verify::checks::predicted_for_power;
use fermat_verify::{run_suite, PrimeChoice, Selection, SuiteConfig};

#[derive(Parser)]
#[command(name = "fermat-verify", version, about = "Exact checks of Fermat ideal identities over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite of checks under two primes and write a report.
    Run {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        k: Vec<u32>,
        /// `auto` or two primes `p1,p2`, each 1 mod n.
        #[arg(long, default_value = "auto")]
        prime: PrimeChoice,
        /// `all`, `quick`, or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: Selection,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Record wall-clock times (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Compute invariants of a single ideal.
    #[command(subcommand)]
    Compute(Compute),
}

#[derive(Subcommand)]
enum Compute {
    /// Minimal generators and invariants of I^(m).
    SymbolicPower {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Graded Betti shifts of I^r or I^(m).
    Betti {
        #[arg(long)]
        n: u32,
        /// `ordinary:r` or `symbolic:m`.
        #[arg(long)]
        power: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn symbolic_power(n: u32, m: u32) -> Result<String> {
    let ctx = FermatContext::auto(n)?;
    let ideal = ctx.symbolic_power(m)?;
    let gens = ideal.minimal_generators()?;
    let degs: Vec<u32> = gens.iter().filter_map(|g| g.degree()).collect();
    let mut out = format!("I^({m}) for n = {n} over F_{}\n", ctx.field().modulus());
    out += &format!("minimal generators: {}\n", gens.len());
    out += &format!("generator degrees: {}\n", join(&degs));
    out += &format!("alpha: {}\n", hilbert::alpha(&ideal)?);
    out += &format!("multiplicity: {}\n", hilbert::multiplicity(&ideal)?);
    match hilbert::regularity(&ideal, None) {
        Ok(r) => out += &format!("regularity: {r}\n"),
        Err(e) => out += &format!("regularity: unavailable ({e})\n"),
    }
    for g in &gens {
        out += &g.render();
        out.push('\n');
    }
    Ok(out)
}

fn betti(n: u32, power: &str) -> Result<String> {
    let (kind, e) = power.split_once(':').context("expected ordinary:r or symbolic:m")?;
    let e: u32 = e.parse().context("exponent")?;
    if e == 0 {
        bail!("exponent must be at least 1");
    }
    let ordinary = match kind {
        "ordinary" => true,
        "symbolic" => false,
        _ => bail!("unknown power kind {kind}"),
    };
    let ctx = FermatContext::auto(n)?;
    let ideal = if ordinary { ctx.ordinary_power(e)? } else { ctx.symbolic_power(e)? };
    let name = if ordinary { format!("I^{e}") } else { format!("I^({e})") };
    let mut out = format!("{name} for n = {n} over F_{}\n", ctx.field().modulus());
    out += &format!("numerator: {:?}\n", hilbert::numerator(&ideal)?);
    match hilbert::betti_codim2(&ideal) {
        Ok(b) => {
            out += "perfect of codimension 2\n";
            out += &format!("F0 shifts: {}\n", join(&b.generator_shifts));
            out += &format!("F1 shifts: {}\n", join(&b.syzygy_shifts_1));
            out += &format!("regularity: {}\n", b.regularity());
        }
        Err(_) => {
            let pred = predicted_for_power(&ctx, ordinary, e)?
                .context("not perfect of codimension 2 and no stated resolution to compare")?;
            let ok = hilbert::numerator_consistent(&ideal, &pred)?;
            out += &format!("stated resolution consistent with numerator and generators: {ok}\n");
            for i in 0..pred.steps.len() {
                out += &format!("F{i} shifts: {}\n", join(&pred.shifts(i)));
            }
            if ok {
                out += &format!("regularity: {}\n", pred.regularity());
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    if let Some(t) = std::env::var("FERMAT_THREADS").ok().and_then(|s| s.parse().ok()) {
        par::init_threads(t);
    }
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<ExitCode> {
    let cli = Cli::parse();
    let text = match cli.command {
        Command::Run { n, k, prime, suite, out, format, timings } => {
            let config = SuiteConfig { ns: n, ks: k, primes: prime, selection: suite, timings };
            let report = run_suite(&config)?;
            let body = match format {
                Format::Json => report.to_json_lines(),
                Format::Text => report.to_text(),
            };
            let failed = report.summary().fail > 0;
            match out {
                Some(path) => std::fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?,
                None => std::io::stdout().write_all(body.as_bytes())?,
            }
            return Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS });
        }
        Command::Compute(Compute::SymbolicPower { n, m }) => symbolic_power(n, m)?,
        Command::Compute(Compute::Betti { n, power }) => betti(n, &power)?,
    };
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}
