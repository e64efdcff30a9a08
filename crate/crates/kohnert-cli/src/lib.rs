//! Shared pieces of the `kohnert` command-line tool: input parsing, JSON encoders and the
//! verification suites.

pub mod json;
pub mod parse;
pub mod verify;

use std::fmt;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// A verification suite found counterexamples.
    SuiteFailure(String),
    BadInput(String),
    Cap(usize),
    /// The closed formula and the expansion oracle disagree.
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::SuiteFailure(_) => 1,
            CliError::BadInput(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::SuiteFailure(s) => write!(f, "verification failed: {s}"),
            CliError::BadInput(s) => write!(f, "bad input: {s}"),
            CliError::Cap(c) => write!(f, "enumeration exceeded --max-diagrams {c}"),
            CliError::Mismatch(s) => write!(f, "formula and oracle disagree: {s}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<kohnert::Error> for CliError {
    fn from(e: kohnert::Error) -> Self {
        match e {
            kohnert::Error::CapExceeded { cap } => CliError::Cap(cap),
            other => CliError::BadInput(other.to_string()),
        }
    }
}
