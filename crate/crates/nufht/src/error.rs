//! Error type shared by all modules of the crate.

use std::fmt;

/// Errors reported by the transform, its parameter machinery, and the
/// application-level solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation.
    Domain(String),
    /// Transform order outside the supported range.
    InvalidOrder { nu: f64 },
    /// Tolerance outside the supported range `[1e-15, 1e-4]`.
    InvalidTolerance { eps: f64 },
    /// Vector lengths do not agree with the plan or request.
    LengthMismatch { expected: usize, got: usize },
    /// The NUFFT fine grid would exceed the configured memory cap.
    GridTooLarge { required: usize, cap: usize },
    /// An unknown NUFFT backend was requested.
    UnknownBackend(String),
    /// An iterative procedure failed to converge within its budget.
    NoConvergence(String),
    /// Parameter selection ran past its hard cap; the inputs are
    /// inconsistent with the supported ranges.
    TermCapExceeded { nu: u32, eps: f64, cap: usize },
    /// A bracketing root solve could not enclose a root.
    BracketFailure(String),
    /// A block expected to contain both local and asymptotic entries
    /// did not admit a feasible split point.
    NoFeasibleSplit,
    /// The Helmholtz wavenumber collides with a Dirichlet eigenvalue.
    NearResonance { j: usize, ell: i64, root: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidOrder { nu } => {
                write!(f, "order nu = {nu} not supported (integer 0..=100 required)")
            }
            Error::InvalidTolerance { eps } => {
                write!(f, "tolerance eps = {eps:e} outside supported range [1e-15, 1e-4]")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::GridTooLarge { required, cap } => write!(
                f,
                "NUFFT fine grid of {required} points exceeds cap of {cap} (raise NUFHT_NUFFT_MAX_GRID)"
            ),
            Error::UnknownBackend(name) => write!(f, "unknown NUFFT backend '{name}'"),
            Error::NoConvergence(msg) => write!(f, "failed to converge: {msg}"),
            Error::TermCapExceeded { nu, eps, cap } => write!(
                f,
                "local term count exceeded cap {cap} for nu = {nu}, eps = {eps:e}"
            ),
            Error::BracketFailure(msg) => write!(f, "bracketing failure: {msg}"),
            Error::NoFeasibleSplit => {
                write!(f, "block has no feasible split point (not a mixed block)")
            }
            Error::NearResonance { j, ell, root } => write!(
                f,
                "kappa^2 is within 1e-10 of the Dirichlet eigenvalue j_({ell},{j})^2 = {:.6e}",
                root * root
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
