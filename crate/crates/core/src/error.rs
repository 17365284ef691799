use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {type_letter}{rank}")]
    UnsupportedRootSystem { type_letter: String, rank: usize },

    #[error("not a root: {0}")]
    NotARoot(String),

    #[error("not a root sum: {0} + {1}")]
    NotARootSum(String, String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("Weyl group too large (cap {cap})")]
    WeylGroupTooLarge { cap: usize },

    #[error("closed subset enumeration too large: {roots} roots exceeds cap {cap}")]
    EnumerationTooLarge { roots: usize, cap: usize },

    #[error("subset is not closed")]
    NotClosed,

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("tensor degree too large: {degree} > {cap}")]
    TensorDegreeTooLarge { degree: usize, cap: usize },

    #[error("module dimension too large: {dim} > {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },

    #[error("enumeration result too large: more than {cap} items")]
    ResultTooLarge { cap: usize },

    #[error("zero start vector")]
    ZeroStartVector,

    #[error("operation requires type A, got {0}")]
    NotTypeA(String),

    #[error("no construction available for {0}")]
    ModuleUnavailable(String),

    #[error("invalid Cartan part: {0}")]
    InvalidCartanPart(String),

    #[error("{0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Whether the error is a resource cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::WeylGroupTooLarge { .. }
                | Error::EnumerationTooLarge { .. }
                | Error::TensorDegreeTooLarge { .. }
                | Error::DimensionTooLarge { .. }
                | Error::ResultTooLarge { .. }
        )
    }
}
