use thiserror::Error;

/// Errors raised by the library.
///
/// Identity violations in cocycle data are reported as data through
/// [`crate::cohomology::ValidationReport`]; the variants here cover malformed
/// input and broken internal invariants.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("invalid table shape: {0}")]
    Shape(String),

    #[error("validation failed: {0}")]
    ValidationFailure(String),

    #[error("irreducible decomposition did not converge: {0}")]
    DecompositionFailure(String),

    #[error("multiplicity {value} is not within {tol:e} of a nonnegative integer")]
    NonIntegralMultiplicity { value: String, tol: f64 },

    #[error("factor sets differ: {0}")]
    FactorSetMismatch(String),

    #[error("dual of {0} could not be identified")]
    DualNotFound(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("unknown simple label: {0}")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that indicate a broken internal invariant rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::DecompositionFailure(_)
                | Error::NonIntegralMultiplicity { .. }
                | Error::FactorSetMismatch(_)
                | Error::DualNotFound(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
