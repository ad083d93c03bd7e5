use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num::Zero;
use sha2::{Digest, Sha256};

use curvesing::basis::DEFAULT_STEP_BUDGET;
use curvesing::germfile::{parse_germ_file, GermFile};
use curvesing::ideal::ColengthMode;
use curvesing::invariants::{family_profile, milnor_number, whitney_check, RunConfig};
use curvesing::matrix::ConstMatrix;
use curvesing::oracle::{milnor_from_delta, semigroup_delta, SemigroupSpec};
use curvesing::poly::Rat;
use curvesing::report::{
    colength_string, ColengthJson, ErrorJson, FamilyJson, MilnorJson, OracleJson, WhitneyJson,
    SCHEMA_VERSION,
};
use curvesing::{Error, Result};

/// Invariants of reduced complex curve singularities: multiplicity,
/// Hilbert-Samuel multiplicity of the Jacobian ideal, complete intersection
/// discrepancy, Milnor number, family profiles and Whitney audits.
#[derive(Parser)]
#[command(name = "curvesing", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a curve germ (alias: milnor)
    #[command(alias = "milnor")]
    Invariants(RunArgs),
    /// Per-sample global intersection numbers of a one-parameter family
    Family(RunArgs),
    /// Whitney-equisingularity audit of a one-parameter family
    Whitney(RunArgs),
    /// Numerical-semigroup delta invariant and Milnor number from a monomial
    /// parametrization
    Oracle(RunArgs),
    /// Raw local and global colength of the input ideal
    Colength(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Germ file describing the curve or family
    file: PathBuf,
    /// Base seed for all random draws
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of independent trials that must agree (minimum 2)
    #[arg(long, default_value_t = 2)]
    trials: u32,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
    /// Retry cap for failed generic draws
    #[arg(long, default_value_t = 5)]
    max_retries: u32,
    /// Reduction-step budget per basis computation
    #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
    step_budget: u64,
    /// Comma-separated sample values, overriding the file (e.g. "0,1,2")
    #[arg(long)]
    samples: Option<String>,
    /// Explicit constant matrix A cutting the complete intersection, rows
    /// separated by ';' (e.g. "1,1,0;1,0,1"); replaces the seeded draw
    #[arg(long)]
    matrix_a: Option<String>,
}

impl RunArgs {
    fn config(&self) -> Result<RunConfig> {
        if self.trials < 2 {
            return Err(Error::parse(0, "--trials must be at least 2"));
        }
        let matrix_a = match &self.matrix_a {
            Some(text) => Some(parse_matrix(text)?),
            None => None,
        };
        Ok(RunConfig {
            seed: self.seed,
            trials: self.trials,
            max_retries: self.max_retries,
            step_budget: self.step_budget,
            matrix_a,
            ..RunConfig::default()
        })
    }
}

fn parse_matrix(text: &str) -> Result<ConstMatrix> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for row in text.split(';') {
        let mut entries = Vec::new();
        for e in row.split(',') {
            let v: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, format!("invalid matrix entry '{}'", e.trim())))?;
            entries.push(v);
        }
        rows.push(entries);
    }
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::parse(0, "matrix rows must have equal length"));
    }
    Ok(ConstMatrix::from_rows(&rows))
}

fn parse_samples(text: &str) -> Result<Vec<Rat>> {
    use std::str::FromStr;
    let mut out = Vec::new();
    for part in text.split(',') {
        let t = part.trim();
        if t.is_empty() {
            continue;
        }
        out.push(
            Rat::from_str(t).map_err(|_| Error::parse(0, format!("invalid sample value '{t}'")))?,
        );
    }
    if out.is_empty() {
        return Err(Error::parse(0, "empty sample list"));
    }
    Ok(out)
}

fn load(args: &RunArgs) -> Result<(GermFile, String)> {
    let bytes = std::fs::read(&args.file)
        .map_err(|e| Error::parse(0, format!("cannot read {}: {e}", args.file.display())))?;
    let digest = format!("{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::parse(0, "germ file is not valid UTF-8"))?;
    let mut file = parse_germ_file(&text)?;
    if let Some(samples) = &args.samples {
        file.samples = parse_samples(samples)?;
    }
    Ok((file, digest))
}

fn run_invariants(args: &RunArgs) -> Result<String> {
    let start = Instant::now();
    let (file, digest) = load(args)?;
    let cfg = args.config()?;
    let germ = file.curve_germ(&mut cfg.budget())?;
    let report = milnor_number(&germ, &cfg)?;
    let json = MilnorJson::from_report(&report, digest, start.elapsed().as_millis());
    if args.json {
        return Ok(serde_json::to_string_pretty(&json).unwrap());
    }
    let mut out = String::new();
    out.push_str(&format!("m            = {}\n", json.m));
    out.push_str(&format!("e_jac        = {}\n", json.e_jac));
    out.push_str(&format!("i0           = {}\n", json.i0));
    out.push_str(&format!("mu           = {}\n", json.mu));
    out.push_str(&format!("polar_degree = {}\n", json.polar_degree));
    out.push_str(&format!("W0 = ({})\n", json.w0_generators.join(", ")));
    out.push_str(&format!(
        "trials agree = {}; single quotient sufficed = {}; smoothability assumed\n",
        json.agreement, json.single_quotient_sufficed
    ));
    Ok(out)
}

fn run_family(args: &RunArgs) -> Result<String> {
    let start = Instant::now();
    let (file, digest) = load(args)?;
    let cfg = args.config()?;
    let fam = file.family_germ()?;
    let rows = family_profile(&fam, &cfg)?;
    let json = FamilyJson::from_rows(&rows, digest, start.elapsed().as_millis());
    if args.json {
        return Ok(serde_json::to_string_pretty(&json).unwrap());
    }
    let mut out = String::new();
    for r in &json.rows {
        out.push_str(&format!("t = {}: global intersection number {}", r.t, r.global_colength));
        if let Some(pc) = r.point_count {
            out.push_str(&format!(
                ", {} point(s), transversal: {}",
                pc,
                if r.transversal == Some(true) { "yes" } else { "no" }
            ));
        }
        out.push('\n');
    }
    Ok(out)
}

fn run_whitney(args: &RunArgs) -> Result<String> {
    let start = Instant::now();
    let (file, digest) = load(args)?;
    let cfg = args.config()?;
    let fam = file.family_germ()?;
    let report = whitney_check(&fam, &cfg)?;
    let json = WhitneyJson::from_report(&report, digest, start.elapsed().as_millis());
    if args.json {
        return Ok(serde_json::to_string_pretty(&json).unwrap());
    }
    let mut out = String::new();
    for r in &json.rows {
        out.push_str(&format!(
            "t = {}: e_jac = {}, i0 = {}, difference = {}\n",
            r.t, r.e_jac, r.i0, r.difference
        ));
    }
    out.push_str(&format!("verdict: {}\n", json.verdict));
    Ok(out)
}

/// Extracts the exponents of a pure monomial parametrization, specializing
/// the deformation parameter to 0 first when one is declared.
fn monomial_exponents(file: &GermFile) -> Result<Vec<u64>> {
    let Some(phi) = &file.parametrization else {
        return Err(Error::Degenerate(
            "the oracle needs a 'parametrization:' section".into(),
        ));
    };
    let mut exps = Vec::new();
    for p in phi {
        let at0 = if file.param.is_some() {
            p.substitute(1, &Rat::zero()).map_vars(1, &[Some(0), None])
        } else {
            p.clone()
        };
        let mut terms = at0.terms();
        let (m, _) = terms.next().ok_or_else(|| {
            Error::Degenerate("parametrization component vanishes at t = 0".into())
        })?;
        if terms.next().is_some() {
            return Err(Error::Degenerate(
                "the oracle needs a pure monomial parametrization (one term per component)".into(),
            ));
        }
        if m.exp(0) == 0 {
            return Err(Error::Degenerate(
                "parametrization components must have positive order in u".into(),
            ));
        }
        exps.push(m.exp(0) as u64);
    }
    Ok(exps)
}

fn run_oracle(args: &RunArgs) -> Result<String> {
    let start = Instant::now();
    let (file, digest) = load(args)?;
    let generators = monomial_exponents(&file)?;
    let spec = SemigroupSpec::new(generators.clone())?;
    let (delta, gaps) = semigroup_delta(&spec);
    let branches = 1; // a monomial parametrization has a single branch
    let mu = milnor_from_delta(delta, branches);
    let json = OracleJson {
        schema_version: SCHEMA_VERSION,
        input_digest: digest,
        generators,
        delta,
        gaps,
        branches,
        mu,
        timings_ms: start.elapsed().as_millis(),
    };
    if args.json {
        return Ok(serde_json::to_string_pretty(&json).unwrap());
    }
    Ok(format!(
        "semigroup <{}>\ndelta = {}\ngaps  = {{{}}}\nmu    = {} (2*delta - r + 1 with r = 1)\n",
        json.generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(","),
        json.delta,
        json.gaps
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(","),
        json.mu
    ))
}

fn run_colength(args: &RunArgs) -> Result<String> {
    let start = Instant::now();
    let (file, digest) = load(args)?;
    let cfg = args.config()?;
    if file.is_family() {
        return Err(Error::Degenerate(
            "colength works on a plain ideal file, not a family".into(),
        ));
    }
    if file.equations.is_empty() {
        return Err(Error::Degenerate(
            "colength needs an 'equations:' section".into(),
        ));
    }
    let ideal = curvesing::ideal::Ideal::new(file.curve_ring(), file.equations.clone());
    let local = ideal.colength(ColengthMode::AtOrigin, &mut cfg.budget())?;
    let global = ideal.colength(ColengthMode::Global, &mut cfg.budget())?;
    let json = ColengthJson {
        schema_version: SCHEMA_VERSION,
        input_digest: digest,
        at_origin: colength_string(local),
        global: colength_string(global),
        timings_ms: start.elapsed().as_millis(),
    };
    if args.json {
        return Ok(serde_json::to_string_pretty(&json).unwrap());
    }
    Ok(format!(
        "colength at origin: {}\ncolength global:    {}\n",
        json.at_origin, json.global
    ))
}

fn main() {
    let cli = Cli::parse();
    let (result, json_mode) = match &cli.command {
        Command::Invariants(a) => (run_invariants(a), a.json),
        Command::Family(a) => (run_family(a), a.json),
        Command::Whitney(a) => (run_whitney(a), a.json),
        Command::Oracle(a) => (run_oracle(a), a.json),
        Command::Colength(a) => (run_colength(a), a.json),
    };
    match result {
        Ok(body) => {
            print!("{body}");
            if !body.ends_with('\n') {
                println!();
            }
        }
        Err(e) => {
            let code = e.exit_code();
            if json_mode {
                let err = ErrorJson {
                    schema_version: SCHEMA_VERSION,
                    error: e.to_string(),
                    exit_code: code,
                };
                println!("{}", serde_json::to_string_pretty(&err).unwrap());
            } else {
                eprintln!("error: {e}");
            }
            std::process::exit(code);
        }
    }
}
