//! Error type shared by all modules.

/// Errors produced by the library.
///
/// The CLI maps `Validation`, `Domain`, and `Ingestion` to exit code 2 and
/// the remaining variants to exit code 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structured input failed validation.
    #[error("validation error: {0}")]
    Validation(String),

    /// A data sequence violated its invariants at a specific record.
    #[error("ingestion error at index {index}: {message}")]
    Ingestion { index: usize, message: String },

    /// A root/argmin search exhausted its bracket without a solution.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// No design satisfies the requested error constraints.
    #[error("infeasible design: {0}")]
    Infeasible(String),

    /// An iteration failed to converge or produced a non-finite value.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A distribution degenerated to something the operation cannot use.
    #[error("degenerate distribution: {0}")]
    Degenerate(String),

    /// The posterior mode sits on the boundary; an interior HPD interval
    /// does not exist and one-sided handling is required.
    #[error("boundary-mode posterior: {0}")]
    BoundaryMode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
