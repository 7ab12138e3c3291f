//! Suite orchestration for the `e510wb` binary.
//!
//! A [`SuiteConfig`] names a suite and its bounds; [`run_suite`] runs the
//! mapped checks in a fixed order and returns a [`Report`], which [`emit`]
//! turns into JSON or Markdown. Nothing in a report depends on wall time
//! unless timing was requested, so equal configs give equal bytes.

pub mod args;
mod report;
mod suites;

pub use report::{emit, Check, Format, Report, Status};

use e510wb_core::e510::Brane;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid bound: {0}")]
    InvalidBound(String),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for usage and input errors, 3 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EomSource {
    Flat,
    GammaNm,
    /// A field file in the `[mu]`/`[nu]`/`[gamma]`/`[beta]` section format,
    /// evaluated at coupling 1.
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    /// L∞ generalized Jacobi, exhaustive and random.
    Jacobi,
    /// Strict to non-strict morphism.
    Automorphism,
    Eom(EomSource),
    CmeRep,
    E510,
    Cocycle,
    Transfer,
    Twist,
    Embed,
    Flux,
    Char,
    CharIndex,
    CharLocal,
    CharNonminimal,
    Cy3 { h11: i64, h12: i64 },
    /// Every module's acceptance checks.
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Automorphism => "automorphism",
            Suite::Eom(_) => "eom",
            Suite::CmeRep => "cme-rep",
            Suite::E510 => "e510",
            Suite::Cocycle => "cocycle",
            Suite::Transfer => "transfer",
            Suite::Twist => "twist",
            Suite::Embed => "embed",
            Suite::Flux => "flux",
            Suite::Char => "char",
            Suite::CharIndex => "char index",
            Suite::CharLocal => "char local",
            Suite::CharNonminimal => "char nonminimal",
            Suite::Cy3 { .. } => "char cy3",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "jacobi" => Suite::Jacobi,
            "automorphism" => Suite::Automorphism,
            "cme-rep" => Suite::CmeRep,
            "e510" => Suite::E510,
            "cocycle" => Suite::Cocycle,
            "transfer" => Suite::Transfer,
            "twist" => Suite::Twist,
            "embed" => Suite::Embed,
            "flux" => Suite::Flux,
            "char" => Suite::Char,
            "all" => Suite::All,
            _ => return Err(CliError::UnknownSuite(s.to_string())),
        })
    }
}

/// Bounds left as `None` fall back to the per-suite defaults listed in
/// [`defaults`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub weight_max: Option<i32>,
    pub arity_max: Option<usize>,
    pub degree: Option<i32>,
    /// `None` runs both branes.
    pub brane: Option<Brane>,
    pub flux: bool,
    pub seed: u64,
    pub timing: bool,
}

pub mod defaults {
    pub const SEED: u64 = 0x510;
    pub const LINF_WEIGHT: i32 = 4;
    pub const ARITY: usize = 4;
    pub const E510_WEIGHT: i32 = 4;
    pub const COCYCLE_WEIGHT: i32 = 2;
    pub const TWIST_WEIGHT: i32 = 8;
    pub const DEGREE: i32 = 8;
    /// Random tuples at arity 5 and 6 in the `jacobi` suite.
    pub const LINF_RANDOM: usize = 500;
    /// Random triples in the `e510` suite.
    pub const E510_RANDOM: usize = 1000;
    /// Transfer triples never go past this coefficient degree; the cocycle
    /// only sees constant coefficients.
    pub const TRANSFER_DEGREE: i32 = 2;

    pub const MAX_WEIGHT: i32 = 10;
    pub const MAX_ARITY: usize = 8;
    pub const MAX_DEGREE: i32 = 20;
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            weight_max: None,
            arity_max: None,
            degree: None,
            brane: None,
            flux: false,
            seed: defaults::SEED,
            timing: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        use defaults::*;
        if let Some(w) = self.weight_max {
            if !(0..=MAX_WEIGHT).contains(&w) {
                return Err(CliError::InvalidBound(format!("--weight-max {} outside 0..={}", w, MAX_WEIGHT)));
            }
        }
        if let Some(a) = self.arity_max {
            if !(1..=MAX_ARITY).contains(&a) {
                return Err(CliError::InvalidBound(format!("--arity-max {} outside 1..={}", a, MAX_ARITY)));
            }
        }
        if let Some(d) = self.degree {
            if !(0..=MAX_DEGREE).contains(&d) {
                return Err(CliError::InvalidBound(format!("--degree {} outside 0..={}", d, MAX_DEGREE)));
            }
        }
        Ok(())
    }
}

/// Run a suite. Check failures are report content; `Err` is reserved for
/// bad configuration and unreadable inputs.
pub fn run_suite(config: &SuiteConfig) -> Result<Report, CliError> {
    config.validate()?;
    suites::run(config)
}

/// Write `emit(report, format)` to `out`, or stdout when `out` is `None`.
pub fn write_report(report: &Report, format: Format, out: Option<&std::path::Path>) -> Result<(), CliError> {
    use std::io::Write;
    let text = emit(report, format);
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io { path: p.display().to_string(), source: e }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io { path: "<stdout>".into(), source: e }),
    }
}
