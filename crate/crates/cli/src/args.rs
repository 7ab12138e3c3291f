//! Command-line grammar.
//!
//! `e510wb <suite> [flags]` for the ten suites, plus the module commands
//! `verify`, `eom check`, `twist nonminimal`, `embed check` and `char ...`.
//! Bounds, format and seed are global flags; the bounds and seed also read
//! `E510WB_*` environment variables when the flag is absent.

use crate::{CliError, EomSource, Format, Suite, SuiteConfig};
use clap::{Parser, Subcommand, ValueEnum};
use e510wb_core::e510::Brane;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "e510wb", version, about = "Exact verification suites for E(5,10) and its L∞ model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(clap::Args, Debug)]
pub struct GlobalOpts {
    #[arg(long, global = true, env = "E510WB_WEIGHT_MAX")]
    pub weight_max: Option<i32>,
    #[arg(long, global = true, env = "E510WB_ARITY_MAX")]
    pub arity_max: Option<usize>,
    #[arg(long, global = true, env = "E510WB_DEGREE")]
    pub degree: Option<i32>,
    #[arg(long, global = true, value_parser = parse_brane)]
    pub brane: Option<Brane>,
    /// Also run flux annihilation (embed only).
    #[arg(long, global = true)]
    pub flux: bool,
    #[arg(long, global = true, env = "E510WB_SEED", default_value_t = crate::defaults::SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record wall times (makes the report nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

fn parse_brane(s: &str) -> Result<Brane, String> {
    s.parse()
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Json,
    Md,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// L∞ generalized Jacobi identities.
    Jacobi,
    /// Decompositions of the cubic constraint representations.
    CmeRep,
    /// Super Jacobi for E(5,10).
    E510,
    /// Closedness of the 3-cocycle.
    Cocycle,
    /// BRST dimensions, homotopy data, transferred bracket, susy table.
    Transfer,
    /// Twist by dz1∧dz2.
    Twist {
        #[command(subcommand)]
        action: Option<TwistAction>,
    },
    /// osp(6|1) inside E(5,10) for the M2 and M5 charts.
    Embed {
        #[command(subcommand)]
        action: Option<EmbedAction>,
    },
    /// Flux annihilation for both branes.
    Flux,
    /// Characters: index, local product, nonminimal specialization.
    Char {
        #[command(subcommand)]
        action: Option<CharAction>,
    },
    /// Every suite.
    All,
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    Eom {
        #[command(subcommand)]
        action: EomAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum TwistAction {
    Nonminimal,
}

#[derive(Subcommand, Debug)]
pub enum EmbedAction {
    Check,
}

#[derive(Subcommand, Debug)]
pub enum CharAction {
    Index,
    Local,
    Nonminimal,
    /// Spectrum of the compactification with Hodge numbers (h11, h12).
    Cy3 {
        #[arg(long, allow_hyphen_values = true)]
        h11: i64,
        #[arg(long, allow_hyphen_values = true)]
        h12: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyWhat {
    Jacobi,
    Automorphism,
    E510Jacobi,
    Cocycle,
    Transfer,
}

#[derive(Subcommand, Debug)]
pub enum EomAction {
    Check {
        #[arg(long, value_enum)]
        preset: Preset,
        /// Field file for `--preset custom-file`.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Flat,
    GammaNm,
    CustomFile,
}

impl Command {
    pub fn suite(self) -> Result<Suite, CliError> {
        Ok(match self {
            Command::Jacobi | Command::Verify { what: VerifyWhat::Jacobi } => Suite::Jacobi,
            Command::Verify { what: VerifyWhat::Automorphism } => Suite::Automorphism,
            Command::CmeRep => Suite::CmeRep,
            Command::E510 | Command::Verify { what: VerifyWhat::E510Jacobi } => Suite::E510,
            Command::Cocycle | Command::Verify { what: VerifyWhat::Cocycle } => Suite::Cocycle,
            Command::Transfer | Command::Verify { what: VerifyWhat::Transfer } => Suite::Transfer,
            Command::Twist { .. } => Suite::Twist,
            Command::Embed { .. } => Suite::Embed,
            Command::Flux => Suite::Flux,
            Command::Char { action: None } => Suite::Char,
            Command::Char { action: Some(CharAction::Index) } => Suite::CharIndex,
            Command::Char { action: Some(CharAction::Local) } => Suite::CharLocal,
            Command::Char { action: Some(CharAction::Nonminimal) } => Suite::CharNonminimal,
            Command::Char { action: Some(CharAction::Cy3 { h11, h12 }) } => Suite::Cy3 { h11, h12 },
            Command::All => Suite::All,
            Command::Eom { action: EomAction::Check { preset, file } } => Suite::Eom(match (preset, file) {
                (Preset::Flat, None) => EomSource::Flat,
                (Preset::GammaNm, None) => EomSource::GammaNm,
                (Preset::CustomFile, Some(p)) => EomSource::File(p),
                (Preset::CustomFile, None) => return Err(CliError::Input("--preset custom-file needs --file PATH".into())),
                (_, Some(_)) => return Err(CliError::Input("--file only goes with --preset custom-file".into())),
            }),
        })
    }
}

impl Cli {
    /// The suite config plus output settings.
    pub fn into_config(self) -> Result<(SuiteConfig, Format, Option<PathBuf>), CliError> {
        let o = self.opts;
        let config = SuiteConfig {
            suite: self.command.suite()?,
            weight_max: o.weight_max,
            arity_max: o.arity_max,
            degree: o.degree,
            brane: o.brane,
            flux: o.flux,
            seed: o.seed,
            timing: o.timing,
        };
        config.validate()?;
        let format = match o.format {
            FormatArg::Json => Format::Json,
            FormatArg::Md => Format::Markdown,
        };
        Ok((config, format, o.out))
    }
}
