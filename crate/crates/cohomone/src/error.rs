//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by parsers and analysis entry points.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A group label could not be parsed.
    #[error("invalid group label: {0}")]
    ParseGroup(String),

    /// A classification-target expression could not be parsed.
    #[error("invalid target: {0}")]
    ParseTarget(String),

    /// A group-diagram file could not be parsed.
    #[error("invalid diagram (line {line}): {msg}")]
    ParseDiagram {
        /// 1-based line number of the offending line.
        line: usize,
        /// What went wrong on that line.
        msg: String,
    },

    /// A structured report could not be parsed.
    #[error("invalid report: {0}")]
    ParseReport(String),

    /// An operation received arguments outside its documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested analysis lies outside the implemented case coverage.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
