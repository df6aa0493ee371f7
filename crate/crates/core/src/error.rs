//! Error type shared by all evaluation layers.

use alloc::string::String;
use core::fmt;

/// Errors reported by the evaluation layers.
///
/// Quadrature *non-convergence* is not an error at the engine level -- it is
/// reported in-band through [`crate::QuadratureResult::converged`].  The
/// assembled evaluators turn an unconverged result into
/// [`Error::NonConvergence`] so that callers never consume a silently bad
/// value.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    Domain(String),
    /// The integrand returned a non-finite value at the given abscissa.
    IntegrandFailure { abscissa: f64 },
    /// Adaptive integration exhausted its budget; best error bound attached.
    NonConvergence { error_estimate: f64 },
    /// A finite-difference stencil would leave the half-space or hit the
    /// source point.
    StencilOutOfDomain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::IntegrandFailure { abscissa } => {
                write!(f, "integrand returned a non-finite value at y = {abscissa}")
            }
            Error::NonConvergence { error_estimate } => {
                write!(f, "quadrature did not converge (best error bound {error_estimate:e})")
            }
            Error::StencilOutOfDomain(msg) => write!(f, "stencil out of domain: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
