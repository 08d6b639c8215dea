use thiserror::Error;

/// Errors surfaced by the lab.
///
/// Numerical checks never silently continue: a gadget whose ground space has
/// the wrong shape, an ambiguous degeneracy cluster, or a solver that fails
/// its residual contract all report through here.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the inputs was violated; the message names the
    /// offending inequality or constraint.
    #[error("domain error: {0}")]
    Domain(String),

    /// A gadget graph failed its hypothesis (wrong ground degeneracy or a
    /// collapsed spectral gap). Detection, not a panic.
    #[error("gadget invalid: {0}")]
    GadgetInvalid(String),

    /// An eigenvalue sits too close to the degeneracy cut to call the
    /// cluster; callers should adjust the tolerance.
    #[error("degeneracy cluster ambiguous: {0}")]
    DegeneracyAmbiguous(String),

    /// Iterative eigensolver did not meet its residual contract.
    #[error("eigensolver did not converge: {0}")]
    NonConvergence(String),

    /// A structural invariant of the build was violated (e.g. an operator
    /// coupling parity sectors that must be preserved).
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Division by a quantity that vanished within tolerance.
    #[error("singularity: {0}")]
    Singularity(String),

    /// A positivity guarantee failed (positive top eigenvector expected).
    #[error("positivity violation: {0}")]
    PerronViolation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
