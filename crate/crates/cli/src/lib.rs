//! Command-line front end for `bruhat-core`.
//!
//! [`run`] parses arguments and executes a command, returning the text to
//! print and the exit code, so the whole CLI can be driven in-process.

pub mod args;
mod commands;
pub mod input;
pub mod sample;

use std::ffi::OsString;

use bruhat_core::InvalidPermutation;
use clap::error::ErrorKind;
use clap::Parser;

pub use args::Format;

/// Stable exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Code {
    Success = 0,
    /// The question was decided and the answer is no.
    Negative = 1,
    /// The answer could not be decided within the configured bounds.
    Inconclusive = 2,
    Usage = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub horizon: u64,
    pub max_steps: u64,
    pub depth: u64,
    pub output_format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            horizon: 512,
            max_steps: 64,
            depth: 8,
            output_format: Format::Text,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse {input:?}: {message}")]
    Parse { input: String, message: String },
    #[error("invalid permutation: {0}")]
    Invalid(#[from] InvalidPermutation),
    #[error("{0}")]
    Core(#[from] bruhat_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> Code {
        match self {
            CliError::Core(bruhat_core::Error::DepthExhausted { .. }) => Code::Inconclusive,
            _ => Code::Usage,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: Code,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: Code::Success,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: Code::Usage,
                },
            };
        }
    };
    match commands::execute(&cli) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.code(),
        },
    }
}
