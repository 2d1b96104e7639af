//! Run configuration: command-line flags layered over an optional TOML file.

use std::fs;
use std::path::{Path, PathBuf};

use loopcert_core::exact::Rational;
use loopcert_core::rep::{validate_params, Params, Surface};
use serde::Deserialize;

use crate::CliError;

/// Seed used when neither the flags nor the config file give one.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// Keys accepted in a `--config` file. Rationals are `"p/q"` strings.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub surface: Option<String>,
    pub max_len: Option<usize>,
    pub trials: Option<usize>,
    pub max_l: Option<usize>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_owned(),
            source: e,
        })?;
        toml::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {}", path.display(), e.message())))
    }
}

/// Options shared by every subcommand, as given on the command line.
#[derive(Debug, Default, Clone, clap::Args)]
pub struct CommonArgs {
    /// TOML file with keys alpha, beta, surface, max_len, trials, max_l, seed.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// genus2 or punctured-torus.
    #[arg(long, global = true)]
    pub surface: Option<String>,
    /// Rational p/q.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Rational p/q.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub surface: Surface,
    pub params: Params,
    pub max_len: Option<usize>,
    pub trials: Option<usize>,
    pub max_l: Option<usize>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

fn parse_rational(name: &str, text: &str) -> Result<Rational, CliError> {
    text.parse()
        .map_err(|e| CliError::Config(format!("{name} = {text:?}: {e}")))
}

impl RunConfig {
    /// Merges flags over the config file and validates the parameters.
    pub fn resolve(common: &CommonArgs) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let surface = match common.surface.as_ref().or(file.surface.as_ref()) {
            Some(s) => s.parse().map_err(|e| CliError::Config(format!("{e}")))?,
            None => Surface::ClosedGenus2,
        };
        let defaults = Params::default();
        let alpha = match common.alpha.as_ref().or(file.alpha.as_ref()) {
            Some(s) => parse_rational("alpha", s)?,
            None => defaults.alpha().clone(),
        };
        let beta = match common.beta.as_ref().or(file.beta.as_ref()) {
            Some(s) => parse_rational("beta", s)?,
            None => defaults.beta().clone(),
        };
        let params = validate_params(&alpha, &beta).map_err(|e| CliError::Config(e.to_string()))?;
        Ok(RunConfig {
            surface,
            params,
            max_len: file.max_len,
            trials: file.trials,
            max_l: file.max_l,
            seed: file.seed.unwrap_or(DEFAULT_SEED),
            out: common.out.clone(),
            format: common.format,
        })
    }
}
