use thiserror::Error;

/// Errors raised by construction, analysis and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range (bound {bound}) in {context}")]
    IndexOutOfRange {
        context: String,
        index: usize,
        bound: usize,
    },
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("unknown group spec {0:?}")]
    UnknownSpec(String),
    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    SizeLimitExceeded { what: String, size: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("input is commutative; its commuting graph is undefined")]
    CommutativeInput,
    #[error("search budget of {budget} node expansions exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("output budget of {budget} items exhausted")]
    OutputBudgetExceeded { budget: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by resource caps rather than malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::SizeLimitExceeded { .. }
                | Error::BudgetExceeded { .. }
                | Error::OutputBudgetExceeded { .. }
        )
    }

    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::NoIdentity => "NoIdentity",
            Error::MissingInverse(_) => "MissingInverse",
            Error::UnknownSpec(_) => "UnknownSpec",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::CommutativeInput => "CommutativeInput",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::OutputBudgetExceeded { .. } => "OutputBudgetExceeded",
            Error::EmptyGraph => "EmptyGraph",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(context: &str, index: usize, bound: usize) -> Error {
    Error::IndexOutOfRange {
        context: context.to_string(),
        index,
        bound,
    }
}
