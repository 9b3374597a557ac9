use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("vector not in span: {0}")]
    NotInSpan(String),
    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),
    #[error("basis columns are linearly dependent")]
    DependentColumns,
    #[error("matrix is singular")]
    Singular,
    #[error("invalid permutation {0}")]
    InvalidPermutation(String),
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("invalid slot designation: {0}")]
    InvalidSlot(String),
    #[error("cannot parse shape {0:?}: {1}")]
    ShapeParse(String, String),
    #[error("overlapping letters in bracket")]
    OverlappingLetters,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("two constructions of {0} disagree")]
    SolveMismatch(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
