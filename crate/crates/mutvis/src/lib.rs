//! Std companion to `mutvis-core`: text formats, DIMACS input, DOT export,
//! wall-clock budgets with multi-threaded search, and JSON reports.

pub mod dimacs;
pub mod dot;
pub mod format;
pub mod parallel;
pub mod report;

pub use mutvis_core;

/// Parse failure with the 1-based line where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}
