use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("generator list is empty")]
    EmptyGeneratorList,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("action is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("element index {index} out of range for a group of order {order}")]
    InvalidElement { index: usize, order: usize },

    #[error("unknown catalog label {0}")]
    UnknownLabel(String),

    #[error("catalog entry {label} failed validation: {reason}")]
    ValidationFailed { label: String, reason: String },

    #[error("no complete enumeration for order {0} (supported: 12, 18, 36)")]
    UnsupportedOrder(usize),

    #[error("vertex {0} is not in the graph")]
    InvalidVertex(usize),

    #[error("group has no cyclic subgroup of order 6")]
    NoOrderSixSubgroup,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("block composition needs exact per-block values")]
    InexactInput,

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("unknown rule {0}")]
    UnknownRule(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
