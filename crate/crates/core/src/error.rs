use thiserror::Error;

/// Errors surfaced by the decomposition toolkit.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: expected two whitespace-separated labels, found {tokens} token(s)")]
    MalformedLine { line: usize, tokens: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("vertex sets must be disjoint")]
    OverlappingSets,

    #[error("first set must not be contained in the second")]
    SubsetViolation,

    #[error("vertex set universe mismatch: {left} vs {right} vertices")]
    UniverseMismatch { left: usize, right: usize },

    #[error("value {value} does not fit into a network capacity")]
    CapacityOverflow { value: String },

    #[error("graph has {n} vertices, exhaustive search is capped at {cap}")]
    GraphTooLarge { n: usize, cap: usize },

    #[error("ranking assignments have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("rank correlation is undefined: {0}")]
    DegenerateRanking(&'static str),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid query: {0}")]
    InvalidQuery(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
