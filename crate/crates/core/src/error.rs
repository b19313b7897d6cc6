//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Failure modes of boundary handling, classification, and linear solves.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A control polygon cannot represent a closed boundary: fewer than four
    /// points, a repeated point, or a self-intersection.
    InvalidBoundary(String),
    /// The boundary left the computational box (or touched its boundary), so
    /// the background grid can no longer cover the domain.
    DomainEscape(String),
    /// An iterative solve did not reach the requested residual.
    NonConvergence { iterations: usize, residual: f64 },
    /// A field was evaluated outside the computational box.
    OutOfDomain,
    /// The background grid is malformed (non-square cells or zero extent).
    InvalidGrid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidBoundary(msg) => write!(f, "invalid boundary: {msg}"),
            Error::DomainEscape(msg) => write!(f, "domain escape: {msg}"),
            Error::NonConvergence { iterations, residual } => write!(
                f,
                "linear solver did not converge: {iterations} iterations, residual {residual:.3e}"
            ),
            Error::OutOfDomain => write!(f, "point outside the computational box"),
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
