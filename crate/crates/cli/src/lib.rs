//! Command-line driver for `reflect-core`.
//!
//! Every subcommand produces a [`report::Report`]. The binary prints it as
//! JSON (default), as a table (`--pretty`) or as CSV (`--format csv`) and
//! exits with 0 when there are no violations, 1 when there are, and 2 on bad
//! usage.

pub mod commands;
pub mod report;
pub mod sweep;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use report::{Format, Report};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or input values; exit code 2.
    Usage(String),
    /// Something failed while running; exit code 1.
    Failure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failure(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<reflect_core::Error> for CliError {
    fn from(e: reflect_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Pretty,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "reflect-rings", version, about = "Class numbers of binary forms and checks of reflection identities")]
pub struct Cli {
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Checkpoint file for long sweeps; rerunning with the same file resumes.
    #[arg(long, global = true)]
    pub resume: Option<PathBuf>,
    /// Seed for the randomized checks. Counting results never depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Add `wall_time_ms` to the report (the output is then no longer reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn output_format(&self) -> Format {
        match (self.format, self.pretty) {
            (Some(FormatArg::Csv), _) => Format::Csv,
            (Some(FormatArg::Pretty), _) | (None, true) => Format::Pretty,
            _ => Format::Json,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classes of integral binary quadratics with a given superdiscriminant.
    QuadSuperdisc {
        #[arg(long, allow_hyphen_values = true)]
        invariant: i64,
        /// Only classes with even middle coefficient.
        #[arg(long)]
        even_b: bool,
        /// Only classes with real roots.
        #[arg(long)]
        real: bool,
    },
    /// Sweep of the quadratic reflection identities for `0 < |n| <= max`.
    QuadOnCheck {
        #[arg(long)]
        max: i64,
    },
    /// Weighted count of binary cubics of one discriminant.
    CubicCount {
        #[arg(long, allow_hyphen_values = true)]
        disc: String,
        /// Require `3 | b` and `3 | c`.
        #[arg(long)]
        traced: bool,
        /// Splitting condition `p:TYPE` with TYPE one of 111, 12, 3, 1^21, 1^3, 0.
        #[arg(long)]
        split: Vec<String>,
        /// Weight each class by its number of roots modulo `p`.
        #[arg(long)]
        marked_root: Vec<u64>,
    },
    /// Sweep of `h_3(-27 D) = 3 h(D)` (D > 0) and `h_3(-27 D) = h(D)` (D < 0).
    CubicOnCheck {
        #[arg(long)]
        max: i64,
    },
    /// Coefficients `n -> h(+-n)`, or `n -> h_3(+-27 n)` with `--traced`.
    Shintani {
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
        #[arg(long)]
        max: i64,
        #[arg(long)]
        traced: bool,
    },
    /// Discriminant-reduction identity at a prime `p != 3` with `p^2 | D`.
    DiscReduction {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<String>,
        /// Check this many random admissible pairs with `|D| <= max-disc` instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 2000)]
        max_disc: i64,
    },
    /// Weighted count of integral quartics with resolvent `y^3 + g2 y^2 + g1 y + g0`.
    QuarticCount {
        /// `g0,g1,g2`
        #[arg(long, allow_hyphen_values = true)]
        resolvent: String,
        /// indef, posdef, negdef, fourreal, def, ...
        #[arg(long)]
        cond: Option<String>,
    },
    /// Integral symmetric 3x3 matrices with characteristic polynomial `y^3 + g2 y^2 + g1 y + g0`.
    SymmatCount {
        /// `g0,g1,g2`
        #[arg(long, allow_hyphen_values = true)]
        charpoly: String,
    },
    /// Quartic reflection identities for one resolvent.
    BqCheck {
        /// `g0,g1,g2`
        #[arg(long, allow_hyphen_values = true)]
        resolvent: String,
    },
    /// Pairs of symmetric 3x3 matrices with `det(A x - B) = c3 x^3 + c2 x^2 + c1 x + c0`.
    BoxSearch {
        /// `c0,c1,c2,c3`, constant term first.
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        even_diagonal: bool,
    },
    /// Checks that the transform of the indicator of `L_i` is `q^(e-i)` times that of `L_(e-i)`.
    FourierLevel {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        h0: u64,
        /// Level to check; all levels when omitted.
        #[arg(long)]
        i: Option<u32>,
    },
    /// Coefficients of the subring zeta series of a local cubic algebra.
    SubringZeta {
        /// 111, 12, 3, 1^21 or 1^3.
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        terms: usize,
        /// Count orders whose trace ideal lies in `m^t`.
        #[arg(long)]
        traced: bool,
        #[arg(long)]
        d0: Option<u32>,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Direct count of subrings of index `p^k` from structure constants.
    SubringOracle {
        /// JSON file with a 3x3x3 array of structure constants (or `{"table": ...}`).
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
        /// Compare with the closed form for this splitting type.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        d0: Option<u32>,
    },
    /// Form class group of a nonsquare discriminant.
    Classgroup {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// 3-torsion sweep over fundamental `D`, `3 ∤ D`, `|D| <= max`.
    ScholzCheck {
        #[arg(long)]
        max: i64,
    },
    /// Runs the fixture suite of every module.
    VerifyAll {
        /// Stop starting new checks after this many seconds.
        #[arg(long, default_value_t = 600)]
        budget: u64,
    },
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let start = std::time::Instant::now();
    let mut report = commands::dispatch(cli)?;
    if cli.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Builds the rayon pool, honouring `REFLECT_RINGS_THREADS`.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("REFLECT_RINGS_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("REFLECT_RINGS_THREADS={v} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Failure(e.to_string()))
}
