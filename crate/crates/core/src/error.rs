use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grading arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("grading arity {0} is outside the supported range 1..=16")]
    UnsupportedArity(usize),

    #[error("scalars belong to different algebras")]
    AlgebraMismatch,

    #[error("the zero element has no degree")]
    ZeroHasNoDegree,

    #[error("scalar is not homogeneous")]
    NotHomogeneous,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("submatrix obtained by deleting row {row} and column {col} is not invertible")]
    SubmatrixNotInvertible { row: usize, col: usize },

    #[error("matrix is not invertible (no invertible pivot in column {column})")]
    SingularMatrix { column: usize },

    #[error(
        "regularity failure: principal block submatrix starting at block {block} is not invertible"
    )]
    RegularityFailure { block: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("entry ({row}, {col}) violates the block degree law")]
    HomogeneityViolation { row: usize, col: usize },

    #[error("operation requires {0}")]
    Precondition(String),

    #[error("total dimension {dim} is not admissible for nonzero degree (needs 0 or 1 mod 4)")]
    DimensionNotAdmissible { dim: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("nilpotent exponential requires zero constant term")]
    NonzeroConstantTerm,

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("invalid input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
