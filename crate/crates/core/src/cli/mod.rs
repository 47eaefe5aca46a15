//! File formats, reports and the `ichom` command line.

pub mod args;
pub mod commands;
pub mod format;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::Parser;
use thiserror::Error;

pub use args::{Cli, Command, ConventionArg, CyclicKind};
pub use format::{algebra_to_text, parse_rational, AlgebraFile, ComplexFile, FormatError};
pub use report::{OutputFormat, Record, Report, VERSION};
pub use suites::{run_suite, SUITES};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Clap(#[from] clap::Error),
}

impl CliError {
    pub fn validation(e: impl ToString) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Reads a file as UTF-8 text, keeping the raw bytes for the report digest.
pub(crate) fn read_input(path: &Path) -> Result<(String, Vec<u8>), CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Format {
        path: path.to_path_buf(),
        source: FormatError {
            line: None,
            message: "input is not valid UTF-8".into(),
        },
    })?;
    Ok((text, bytes))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Betti { file } => commands::betti(file),
        Command::Ih {
            file,
            perversity,
            control,
        } => commands::ih(file, perversity.as_deref(), control),
        Command::Cyclic {
            which,
            file,
            max_degree,
        } => commands::cyclic(*which, file, *max_degree),
        Command::Perversity { dimension, control } => commands::perversity(*dimension, control),
        Command::Verify {
            suite,
            max_degree,
            cutoff_convention,
        } => run_suite(suite, *max_degree, *cutoff_convention),
    }
}

/// Parses `args` (including the program name) and renders the report.
pub fn run<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok(execute(&cli)?.render(cli.format))
}
