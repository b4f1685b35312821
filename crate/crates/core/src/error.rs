use thiserror::Error;

/// Domain errors raised by the combinatorial operations.
///
/// Every variant describes a violated precondition on the inputs; none of
/// them indicates an internal inconsistency except [`Error::NoWitness`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {kind}: bad token `{token}`")]
    Parse { kind: &'static str, token: String },
    #[error("entry {0} occurs more than once")]
    Duplicate(u32),
    #[error("entries must be positive, found 0")]
    ZeroEntry,
    #[error("{0} is not an entry")]
    MissingEntry(u32),
    #[error("{0} is already an entry")]
    PresentEntry(u32),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("not standard: {0}")]
    NotStandard(String),
    #[error("({row},{col}) is not a corner")]
    NotACorner { row: usize, col: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no tableau of shape {shape} lies above {tableau}")]
    NoWitness { tableau: String, shape: String },
}

pub type Result<T> = std::result::Result<T, Error>;
