use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// Distance-based operations are defined for connected graphs only.
    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown graph name: {0}")]
    UnknownName(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("eigensolver failed to converge")]
    NoConvergence,

    /// The branch-and-bound solver hit its node budget. Never a wrong
    /// answer: the caller gets this error instead of an approximation.
    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),

    #[error("linear program dimension mismatch")]
    LpDimension,

    /// Gadget constructions reject split inputs; use `is_split` first.
    #[error("split graph rejected: {0}")]
    SplitInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
