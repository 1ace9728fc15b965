//! JSON formats, seeded verification suites and command implementations on top
//! of `logconn-core`. Scalars are serialized as exact rational strings and pole
//! indices as 1-based integers.

pub mod commands;
pub mod encode;
pub mod sample;
pub mod suites;
pub mod table;

use serde_json::Value;

/// Failure classes of a command, each with its own exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unparseable or inconsistent arguments.
    Usage(String),
    /// Well-formed input outside the domain of the requested operation.
    Domain(logconn_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "domain error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<logconn_core::Error> for CliError {
    fn from(e: logconn_core::Error) -> Self {
        CliError::Domain(e)
    }
}

/// A command result: the JSON document and whether a verification failed.
#[derive(Debug)]
pub struct Outcome {
    pub value: Value,
    pub failed: bool,
}

impl Outcome {
    pub fn ok(value: Value) -> Self {
        Outcome { value, failed: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            2
        } else {
            0
        }
    }
}
