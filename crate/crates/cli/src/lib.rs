//! Command-line front end over the `capgame` library.
//!
//! Every command is a thin adapter: it parses arguments, calls the library
//! and lays the result out as an [`OutputTable`].

pub mod commands;
pub mod table;

use std::io::Write;
use std::path::PathBuf;

use capgame::rational::parse_rational;
use capgame::verify::DEFAULT_SCALE_LIMIT;
use capgame::Rational;
use clap::{Args, Parser, Subcommand};

pub use table::{Cell, Format, OutputTable, RenderOptions};

/// Environment variable overriding the brute-force oracle scale bound.
pub const SCALE_ENV: &str = "CAPGAME_ORACLE_MAX_SCALE";

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const HYPOTHESIS: i32 = 2;
    pub const MISMATCH: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] capgame::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(capgame::Error::ParamsOutOfTheorem(_) | capgame::Error::InvalidT { .. }) => {
                exit::HYPOTHESIS
            }
            _ => exit::USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "capgame", version, about = "Capability transfer functions of mixed capability games")]
pub struct Cli {
    /// Output format: table, csv or json.
    #[arg(long, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Also render rationals as fixed-point decimals.
    #[arg(long, global = true)]
    pub decimal: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mixed Gold and Mines Game.
    #[command(subcommand)]
    Mgmg(MgmgCommand),
    /// Generic games read from JSON files.
    #[command(subcommand)]
    Game(GameCommand),
}

#[derive(Debug, Subcommand)]
pub enum MgmgCommand {
    /// Closed-form equilibrium payoff sets over a capability grid.
    Ctf(CtfArgs),
    /// An explicit pure equilibrium of class t.
    Equilibrium(EquilibriumArgs),
    /// Resource layout, one record per location.
    Layout(LayoutArgs),
    /// Brute-force check of the closed form; prints a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum GameCommand {
    /// Equilibrium payoff set for every capability profile.
    Ctf(GameCtfArgs),
    /// Equal-capability welfare levels and the positivity verdict.
    CapabilityPositive(GameFileArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ScaleArgs {
    #[arg(long = "M", value_parser = positive)]
    pub m: usize,
    /// Shared-gold payoff, as p/q or an integer.
    #[arg(long, value_parser = rational)]
    pub rho: Rational,
    /// Mine payoff, as p/q or an integer.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub mu: Rational,
}

#[derive(Debug, Args)]
pub struct CtfArgs {
    #[command(flatten)]
    pub scale: ScaleArgs,
    #[arg(long, value_parser = positive)]
    pub ca_max: usize,
    #[arg(long, value_parser = positive)]
    pub cb_max: usize,
    /// Append a brute-force match column.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct EquilibriumArgs {
    #[command(flatten)]
    pub scale: ScaleArgs,
    #[arg(long, value_parser = positive)]
    pub ca: usize,
    #[arg(long, value_parser = positive)]
    pub cb: usize,
    /// Class bit, the starting line of player A.
    #[arg(long)]
    pub t: u8,
}

#[derive(Debug, Args)]
pub struct LayoutArgs {
    #[arg(long = "M", value_parser = positive)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub scale: ScaleArgs,
    #[arg(long, value_parser = positive)]
    pub ca: usize,
    #[arg(long, value_parser = positive)]
    pub cb: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Pure,
    Mixed,
}

#[derive(Debug, Args)]
pub struct GameCtfArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Pure)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct GameFileArgs {
    pub file: PathBuf,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Settings taken from the environment rather than the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub scale_limit: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            scale_limit: DEFAULT_SCALE_LIMIT,
        }
    }
}

impl Settings {
    /// Reads the oracle bound override; a raised bound produces a warning.
    pub fn from_env_value(value: Option<&str>, err: &mut dyn Write) -> Result<Self, CliError> {
        let Some(v) = value else { return Ok(Self::default()) };
        let limit = v
            .trim()
            .parse::<usize>()
            .map_err(|e| CliError::Usage(format!("{SCALE_ENV}={v:?}: {e}")))?;
        if limit > DEFAULT_SCALE_LIMIT {
            let _ = writeln!(
                err,
                "warning: oracle scale bound raised to {limit} (default {DEFAULT_SCALE_LIMIT}); \
                 exhaustive sweeps grow as 4^(4M)"
            );
        }
        Ok(Self { scale_limit: limit })
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, settings: Settings, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    exit::OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    exit::USAGE
                }
            };
        }
    };
    let opts = RenderOptions {
        format: cli.format,
        decimal: cli.decimal,
    };
    match commands::dispatch(&cli.command, settings) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.render(opts).as_bytes());
            if outcome.all_matched() {
                exit::OK
            } else {
                let _ = writeln!(err, "verification mismatch: closed form disagrees with brute force");
                exit::MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
