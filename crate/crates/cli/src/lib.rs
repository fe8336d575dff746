//! Command-line front end for `poincare-core`.
//!
//! Exit codes: 0 success, 1 a claim or verification failed, 2 invalid input.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use poincare_core::Error;

pub mod commands;
pub mod explore;
pub mod input;
pub mod verify;

use input::{InputArgs, PrecisionArgs};

#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Invalid(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Invalid(m) => write!(f, "invalid input: {m}"),
            Failure::Verification(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(m) => Failure::Invalid(m),
            Error::AngleRequiresApprox { .. }
            | Error::DegenerateAngle(_)
            | Error::ZeroPolynomial
            | Error::NotMonic
            | Error::NotPositive => Failure::Invalid(e.to_string()),
            Error::ExceededCap { .. } | Error::LinesParallel | Error::SearchExhausted { .. } | Error::Internal(_) => {
                Failure::Verification(e.to_string())
            }
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "poincare", version, about = "Poincaré multipliers, Curtiss bounds and extremal radii")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct LadderArgs {
    /// Ratio between consecutive radii on the search ladder.
    #[arg(long, default_value = "10")]
    pub growth: String,

    /// Number of rungs tried in each direction.
    #[arg(long, default_value_t = 12)]
    pub max_iter: usize,
}

impl LadderArgs {
    pub fn ladder(&self) -> Result<poincare_core::extremal::Ladder, Failure> {
        Ok(poincare_core::extremal::Ladder {
            start: poincare_core::rational::int(1),
            growth: poincare_core::rational::parse(&self.growth)?,
            max_iter: self.max_iter,
        })
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide positivity on [0, ∞).
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Curtiss bound: per-angle contributions and their sum.
    Bound {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Minimal multiplier degree via exact LP.
    Opt {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        /// Highest degree tried; required for raw coefficients.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Write every per-degree certificate as JSON.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
        /// Cross-check each degree against the convex-hull test.
        #[arg(long)]
        hull_check: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Radii for the given angles with opt = bound.
    Extremal {
        /// Root angles in units of π, e.g. "7/24,10/24,11/24".
        #[arg(long)]
        angles: String,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[command(flatten)]
        ladder: LadderArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Append a factor at angle φ ∈ [π/2, π] without lowering opt.
    Extend {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        /// Angle of the new factor in units of π, e.g. "14/24" or "1".
        #[arg(long)]
        phi: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[command(flatten)]
        ladder: LadderArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Random angle tuples: gap at unit radii versus extremal radii, as CSV.
    Explore {
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest number of quadrant-1 angles per sample (at least 1).
        #[arg(long, default_value_t = 3)]
        max_ell: usize,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[command(flatten)]
        ladder: LadderArgs,
        /// CSV destination (stdout if absent).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recompute the worked examples and print a pass/fail table.
    VerifyPaper,
}

/// Writes `text` to `path`, or to stdout.
pub fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Verification(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { input, precision, output } => commands::check(&input, &precision, output.as_ref()),
        Command::Bound { input, output } => commands::bound(&input, output.as_ref()),
        Command::Opt { input, precision, max_degree, emit_certificate, hull_check, output } => commands::opt(
            &input,
            &precision,
            max_degree,
            emit_certificate.as_ref(),
            hull_check,
            output.as_ref(),
        ),
        Command::Extremal { angles, precision, ladder, output } => {
            commands::extremal(&angles, &precision, &ladder, output.as_ref())
        }
        Command::Extend { input, precision, phi, max_degree, ladder, output } => {
            commands::extend(&input, &precision, &phi, max_degree, &ladder, output.as_ref())
        }
        Command::Explore { samples, seed, max_ell, precision, ladder, output } => {
            let config = explore::ExploreConfig { samples, seed, max_ell, precision: precision.mode(), ladder: ladder.ladder()? };
            explore::run(&config, output.as_ref())
        }
        Command::VerifyPaper => verify::run(),
    }
}
