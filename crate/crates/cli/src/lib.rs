//! `gradalg` command-line front end.
//!
//! Exit codes: 0 success, 1 property failure, 2 invalid input, 3 homogeneity
//! violation, 4 computation error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gradalg::json::{
    element_to_json, matrix_to_json, parse_matrix, poly_to_json, terms_to_json, AlgebraJson,
    MatrixJson, TermJson,
};
use gradalg::properties::{run_trial, Property, SuiteConfig, Trial};
use gradalg::{
    ddet, gber, gdet_graded, gtr, liouville_check, multilinear_coefficients, Algebra,
    AlgebraDescriptor, CliffordElement, GradedMatrix, GroupElement, Mode, RankVector, Route,
};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SEED_ENV: &str = "GRADALG_SEED";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Lib(#[from] gradalg::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Lib(gradalg::Error::Schema(_)) => 2,
            CliError::Lib(gradalg::Error::HomogeneityViolation { .. }) => 3,
            CliError::Lib(_) => 4,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "gradalg",
    version,
    about = "Exact graded linear algebra over Clifford algebras"
)]
pub struct Cli {
    /// Print scalars as JSON term lists instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded trace.
    Gtr(Input),
    /// Graded determinant of a purely even matrix.
    Gdet(GdetArgs),
    /// Permutation coefficients of gdet for a unit pattern.
    GdetCoeffs {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Graded Berezinian of a degree 0 matrix.
    Gber(Input),
    /// Squared Dieudonne determinant of a quaternionic matrix.
    Ddet(Input),
    /// Both sides of gber(exp(zeta X)) = exp(gtr(zeta X)) mod zeta^K.
    Liouville {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Run a randomized property suite and emit a JSON report.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct Input {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RouteArg {
    Udl,
    Ldu,
}

#[derive(Debug, Args)]
pub struct GdetArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Reject nonzero degrees when |r| = 2, 3 (mod 4) (default).
    #[arg(long, conflicts_with = "lax")]
    pub strict: bool,
    #[arg(long)]
    pub lax: bool,
    #[arg(long, value_enum, default_value = "udl")]
    pub route: RouteArg,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub property: String,
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    /// Overridden by the GRADALG_SEED environment variable.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated rank vector, e.g. `1,1,1,1` (even block ranks) or
    /// eight entries with the odd ones.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ranks: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub p: usize,
    #[arg(long, default_value_t = 2)]
    pub q: usize,
    /// Degrees of adjoined odd generators, e.g. `001,111`.
    #[arg(long, value_delimiter = ',')]
    pub odd: Vec<String>,
    /// Truncation order for the Liouville suite.
    #[arg(long, default_value_t = 6)]
    pub order: usize,
    /// Include each trial's input matrices in the report.
    #[arg(long)]
    pub include_inputs: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct TrialReport {
    pub index: u64,
    pub inputs_sha256: String,
    pub result: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<MatrixJson>>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub seed: u64,
    pub trials: u64,
    pub algebra: AlgebraJson,
    pub ranks: Vec<usize>,
    pub order: usize,
    pub passed: u64,
    pub failed: u64,
    pub results: Vec<TrialReport>,
}

fn load(path: &Path) -> Result<GradedMatrix<CliffordElement>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    Ok(parse_matrix(&text)?)
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn print_scalar(out: &mut dyn Write, json: bool, x: &CliffordElement) -> Result<()> {
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&element_to_json(x)).expect("serializable")
        )
        .map_err(io)
    } else {
        writeln!(out, "{x}").map_err(io)
    }
}

fn parse_degree(s: &str) -> Result<GroupElement> {
    let coords = s
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(gradalg::Error::Schema(format!("bad degree {s:?}"))),
        })
        .collect::<std::result::Result<Vec<u8>, _>>()?;
    GroupElement::from_coords(&coords).map_err(|e| gradalg::Error::Schema(e.to_string()).into())
}

pub fn effective_seed(flag: u64) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| gradalg::Error::Schema(format!("{SEED_ENV}={v:?} is not a u64")).into()),
        Err(_) => Ok(flag),
    }
}

/// SHA-256 of the compact JSON array of a trial's input matrices.
pub fn inputs_hash(inputs: &[MatrixJson]) -> String {
    let text = serde_json::to_string(inputs).expect("serializable");
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn trial_report(t: Trial, include_inputs: bool) -> TrialReport {
    let inputs: Vec<MatrixJson> = t.inputs.iter().map(matrix_to_json).collect();
    TrialReport {
        index: t.index,
        inputs_sha256: inputs_hash(&inputs),
        result: if t.pass { "PASS" } else { "FAIL" },
        detail: t.detail,
        inputs: include_inputs.then_some(inputs),
    }
}

pub fn check(args: &CheckArgs) -> Result<CheckReport> {
    let property: Property = args.property.parse()?;
    let seed = effective_seed(args.seed)?;
    let odd = args
        .odd
        .iter()
        .map(|s| parse_degree(s))
        .collect::<Result<Vec<_>>>()?;
    let algebra = Algebra::new(AlgebraDescriptor {
        p: args.p,
        q: args.q,
        odd,
    })
    .map_err(|e| gradalg::Error::Schema(e.to_string()))?;
    let ranks = RankVector::new(args.ranks.clone(), algebra.arity())
        .map_err(|e| gradalg::Error::Schema(e.to_string()))?;
    let cfg = SuiteConfig {
        algebra: algebra.clone(),
        ranks,
        order: args.order,
    };
    // collect keeps index order, so the report does not depend on scheduling
    let results: Vec<TrialReport> = (0..args.trials)
        .into_par_iter()
        .map(|i| trial_report(run_trial(property, &cfg, seed, i), args.include_inputs))
        .collect();
    let passed = results.iter().filter(|r| r.result == "PASS").count() as u64;
    Ok(CheckReport {
        property: property.name().to_string(),
        seed,
        trials: args.trials,
        algebra: AlgebraJson::from_algebra(&algebra),
        ranks: cfg.ranks.ranks().to_vec(),
        order: args.order,
        passed,
        failed: args.trials - passed,
        results,
    })
}

#[derive(Serialize)]
struct CoefficientRow {
    sigma: Vec<usize>,
    value: Vec<TermJson>,
    normalized: String,
}

/// Runs one command, writing its output to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Gtr(a) => print_scalar(out, cli.json, &gtr(&load(&a.input)?))?,
        Command::Gdet(a) => {
            let mode = if a.lax { Mode::Lax } else { Mode::Strict };
            let route = match a.route {
                RouteArg::Udl => Route::Udl,
                RouteArg::Ldu => Route::Ldu,
            };
            print_scalar(out, cli.json, &gdet_graded(&load(&a.input)?, mode, route)?)?;
        }
        Command::GdetCoeffs { pattern } => {
            let coeffs = multilinear_coefficients(&load(pattern)?)?;
            if cli.json {
                let rows: Vec<CoefficientRow> = coeffs
                    .iter()
                    .map(|c| CoefficientRow {
                        sigma: c.sigma.clone(),
                        value: terms_to_json(&c.value),
                        normalized: c.normalized.to_string(),
                    })
                    .collect();
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&rows).expect("serializable")
                )
                .map_err(io)?;
            } else {
                for c in &coeffs {
                    writeln!(out, "{:?}\t{}\t{}", c.sigma, c.value, c.normalized).map_err(io)?;
                }
            }
        }
        Command::Gber(a) => print_scalar(out, cli.json, &gber(&load(&a.input)?)?)?,
        Command::Ddet(a) => {
            let x = load(&a.input)?;
            let d = ddet(x.matrix())?;
            writeln!(out, "{}", d.norm_squared).map_err(io)?;
        }
        Command::Liouville { input, order } => {
            let (lhs, rhs) = liouville_check(&load(input)?, *order)?;
            let pass = lhs == rhs;
            if cli.json {
                let doc = serde_json::json!({
                    "lhs": poly_to_json(&lhs),
                    "rhs": poly_to_json(&rhs),
                    "result": if pass { "PASS" } else { "FAIL" },
                });
                writeln!(out, "{doc}").map_err(io)?;
            } else {
                writeln!(out, "gber(exp(zeta X)) = {lhs}").map_err(io)?;
                writeln!(out, "exp(gtr(zeta X))  = {rhs}").map_err(io)?;
                writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).map_err(io)?;
            }
            return Ok(if pass { 0 } else { 1 });
        }
        Command::Check(a) => {
            let report = check(a)?;
            let text = serde_json::to_string_pretty(&report).expect("serializable");
            match &a.report {
                Some(p) => std::fs::write(p, text + "\n").map_err(|e| CliError::Io {
                    path: p.clone(),
                    source: e,
                })?,
                None => writeln!(out, "{text}").map_err(io)?,
            }
            return Ok(if report.failed == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}
