//! Crate-wide error type.

use std::fmt;

/// Errors reported by problem construction, sketching, factorization and the
/// iterative solvers.
#[derive(Debug)]
pub enum Error {
    /// Incompatible or invalid dimensions.
    Dimension(String),
    /// A matrix turned out numerically rank-deficient (e.g. the sketched
    /// matrix `SA` when the sketch size is too small).
    RankDeficient(String),
    /// Parameters outside the validity domain of a formula.
    Domain(String),
    /// Malformed input file; carries the 1-based line number.
    Parse {
        line: usize,
        msg: String,
    },
    /// Loss of positive-definiteness inside an iterative method.
    Breakdown {
        iter: usize,
        msg: String,
    },
    /// A numerical routine failed to converge to its tolerance.
    Numerical(String),
    /// Bad command-line usage.
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(msg) => write!(f, "dimension error: {msg}"),
            Error::RankDeficient(msg) => write!(f, "rank-deficiency error: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Breakdown { iter, msg } => write!(f, "breakdown at iteration {iter}: {msg}"),
            Error::Numerical(msg) => write!(f, "numerical error: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
