use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("cannot parse `{text}` as a rational number")]
    BadNumber { text: String },

    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("index lists differ in length ({rows} rows vs {cols} columns)")]
    IndexLengthMismatch { rows: usize, cols: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("index list must be non-empty and strictly increasing, starting at 1 or above")]
    NotIncreasing,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix side {side} exceeds the determinant oracle limit {limit}")]
    OracleLimit { side: usize, limit: usize },

    #[error("{what} {value} out of range (must be between {min} and {max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("zero pivot at position ({0}, {0}); arrange the matrix first")]
    ZeroPivot(usize),

    #[error("pivot at ({0}, {0}) must be 1 before its column is cleared")]
    PivotNotOne(usize),

    #[error("matrix is zero; rank at least 1 is required")]
    ZeroMatrix,

    #[error("matrix is singular")]
    Singular,

    #[error("principal minor of order {0} is zero; the quotient is undefined")]
    DivisionByZero(usize),

    #[error("operation ordinal {q} out of range 1..={max}")]
    StepOutOfRange { q: usize, max: usize },

    #[error("matrices with min dimension {side} exceed the arrangement check limit {limit}")]
    ArrangeLimit { side: usize, limit: usize },
}
