use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("unknown letter {0:?}")]
    UnknownLetter(String),

    #[error("automata are defined over different alphabets")]
    AlphabetMismatch,

    #[error("set is not an invariant of the automaton")]
    NotAnInvariant,

    #[error("step budget exceeded (cap {cap})")]
    BudgetExceeded { cap: u64 },

    #[error("no mergeable pair of components")]
    NoMergeablePair,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
