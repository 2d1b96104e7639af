//! Command-line front end for `loopcert-core`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code, so tests can drive the CLI without spawning a process.

pub mod config;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use loopcert_core::certify::{
    certify_word, kernel_witness, nonconjugacy_witness, run_theorem_suite, verify_lemma_degrees,
    CertifyError, LemmaConfig, Verdict,
};
use loopcert_core::rep::Representation;
use loopcert_core::scc::enumerate_scc_classes;
use loopcert_core::words::parse_word;

use config::{CommonArgs, RunConfig};
use render::{
    ClassOut, ClassesOut, KernelDetailOut, LemmaOut, Render, ReportOut, WitnessOut, WordOut,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        CliError::Config(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "loopcert", version, about = "Exact certification of non-injective surface group representations")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full check and write a report.
    Certify {
        #[arg(long)]
        max_len: Option<usize>,
        /// Emit timing_ms as null so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// Evaluate one word and decide the order of its image.
    Word {
        /// For example "x^2 y" or "[[x,y],[x^2,y]]".
        text: String,
    },
    /// List simple closed curve classes on the punctured torus.
    Enumerate {
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Sample alternating words and check entry degrees.
    Lemma {
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_l: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        allow_bad_hypotheses: bool,
    },
    /// Show the kernel element and its certificate.
    Kernel,
    /// Show a word whose trace varies with the deformation parameter.
    Witness {
        #[arg(long, default_value_t = 4)]
        max_search_len: usize,
    },
}

const DEFAULT_MAX_LEN: usize = 12;

/// Output of one subcommand plus its exit status.
struct Outcome {
    body: String,
    code: i32,
}

fn emit(cfg: &RunConfig, body: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Io {
            path: path.clone(),
            source: e,
        }),
        None => stdout.write_all(body.as_bytes()).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            source: e,
        }),
    }
}

fn positive(name: &str, v: usize) -> Result<usize, CliError> {
    if v == 0 {
        Err(CliError::Config(format!("--{name} must be at least 1")))
    } else {
        Ok(v)
    }
}

fn representation(cfg: &RunConfig) -> Result<Representation, CliError> {
    Representation::new(cfg.params.clone(), cfg.surface).map_err(|e| CliError::Config(e.to_string()))
}

fn execute(cfg: &RunConfig, command: &Command) -> Result<Outcome, CliError> {
    let rep = representation(cfg)?;
    let surface = cfg.surface.name();
    Ok(match command {
        Command::Certify { max_len, no_timing } => {
            let max_len = positive("max-len", max_len.or(cfg.max_len).unwrap_or(DEFAULT_MAX_LEN))?;
            let start = Instant::now();
            let report = run_theorem_suite(&rep, max_len)?;
            let elapsed = start.elapsed().as_millis() as u64;
            let out = ReportOut::new(&report, (!no_timing).then_some(elapsed));
            Outcome {
                body: out.render(cfg.format),
                code: if report.passed() { EXIT_OK } else { EXIT_FAILED },
            }
        }
        Command::Word { text } => {
            let word = parse_word(text).map_err(|e| CliError::Config(format!("{text:?}: {e}")))?;
            let cert = certify_word(&rep, &word)?;
            Outcome {
                body: WordOut::new(&cert, surface).render(cfg.format),
                code: EXIT_OK,
            }
        }
        Command::Enumerate { max_len } => {
            let max_len = max_len
                .or(cfg.max_len)
                .ok_or_else(|| CliError::Config("--max-len is required".into()))?;
            let classes = enumerate_scc_classes(positive("max-len", max_len)?);
            Outcome {
                body: ClassesOut(classes.iter().map(ClassOut::from).collect()).render(cfg.format),
                code: EXIT_OK,
            }
        }
        Command::Lemma {
            trials,
            max_l,
            seed,
            allow_bad_hypotheses,
        } => {
            let defaults = LemmaConfig::default();
            let lemma = LemmaConfig {
                trials: positive("trials", trials.or(cfg.trials).unwrap_or(defaults.trials))?,
                max_l: positive("max-l", max_l.or(cfg.max_l).unwrap_or(defaults.max_l))?,
                seed: seed.unwrap_or(cfg.seed),
                allow_bad_hypotheses: *allow_bad_hypotheses,
            };
            let reports = verify_lemma_degrees(&rep, &lemma)?;
            let out = LemmaOut::new(&reports, lemma.max_l, lemma.seed);
            Outcome {
                code: if out.all_conform() { EXIT_OK } else { EXIT_FAILED },
                body: out.render(cfg.format),
            }
        }
        Command::Kernel => {
            let k = kernel_witness(&rep)?;
            Outcome {
                code: if k.certificate.verdict == Verdict::Identity { EXIT_OK } else { EXIT_FAILED },
                body: KernelDetailOut::new(&k, surface).render(cfg.format),
            }
        }
        Command::Witness { max_search_len } => {
            let w = nonconjugacy_witness(&rep, *max_search_len)?;
            Outcome {
                body: WitnessOut::new(&w, surface).render(cfg.format),
                code: EXIT_OK,
            }
        }
    })
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Reports go to `stdout` or `--out`; diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_CONFIG;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = RunConfig::resolve(&cli.common).and_then(|cfg| {
        let outcome = execute(&cfg, &cli.command)?;
        emit(&cfg, &outcome.body, stdout)?;
        Ok(outcome.code)
    });
    match result {
        Ok(code) => {
            if code == EXIT_FAILED {
                let _ = writeln!(stderr, "loopcert: certification failed");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "loopcert: {e}");
            e.exit_code()
        }
    }
}

