//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by geometry, meshing, assembly and solver routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A boundary representation violates its invariants (degenerate edge,
    /// open loop, self-intersection detected during processing).
    InvalidGeometry(String),
    /// A constructor or operation received an out-of-range parameter.
    InvalidParameter(String),
    /// The background grid does not cover the domain, or an embedded entity
    /// leaves the active mesh.
    Coverage(String),
    /// A configuration the method excludes, e.g. a fibre lying on a face.
    Unsupported(String),
    /// An iterative solver did not reach the requested residual.
    SolverFailure {
        what: String,
        achieved_residual: f64,
    },
    /// A matrix expected to be positive definite is numerically singular.
    DegenerateSystem(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGeometry(msg) => write!(f, "invalid geometry: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Coverage(msg) => write!(f, "coverage error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported configuration: {msg}"),
            Error::SolverFailure {
                what,
                achieved_residual,
            } => write!(
                f,
                "solver failure in {what}: achieved residual {achieved_residual:e}"
            ),
            Error::DegenerateSystem(msg) => write!(f, "degenerate system: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
