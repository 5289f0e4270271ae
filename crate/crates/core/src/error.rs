use thiserror::Error;

/// Errors raised by the library.
///
/// `TheoremViolation` is special: it signals that an exact combinatorial
/// statement the engine relies on failed on concrete input. Callers must
/// never downgrade it to an ordinary input error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has genus {0}; genus at least 2 is required")]
    GenusTooSmall(i64),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not stable: {0}")]
    NotStable(String),

    #[error("subcurve must be a nonempty set of existing vertices")]
    EmptySubcurve,

    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),

    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),

    #[error("multidegree has {got} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("total degrees differ: {0} vs {1}")]
    DegreeMismatch(i64, i64),

    #[error("multidegree {0:?} is not balanced")]
    Unbalanced(Vec<i64>),

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("malformed graph file at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
