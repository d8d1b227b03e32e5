use thiserror::Error;

/// Every failure the library can report. Cell positions are 1-based `(row, column)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("row order violated at cell ({row},{col})")]
    RowOrderViolation { row: usize, col: usize },
    #[error("column order violated at cell ({row},{col})")]
    ColumnOrderViolation { row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("offset too small: {0}")]
    OffsetTooSmall(String),
    #[error("union is not a tableau at cell ({row},{col})")]
    OrderViolation { row: usize, col: usize },
    #[error("shifting would produce an entry below 1")]
    UnderflowBelowOne,
    #[error("skew input not supported by {0}")]
    SkewInputNotSupported(&'static str),
    #[error("not a tableau: {0}")]
    NotATableau(String),
    #[error("index {index} out of range for value range {range}")]
    IndexOutOfRange { index: usize, range: usize },
    #[error("not a Littlewood-Richardson tableau")]
    NotLittlewoodRichardson,
    #[error("not in image: {0}")]
    NotInImage(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("negative entry at ({row},{col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("map mismatch: {0}")]
    MapMismatch(String),
    #[error("no reduction path from {from} to {to}")]
    Unreachable { from: String, to: String },
    #[error("value has wrong kind: expected {0}")]
    WrongValue(&'static str),
    #[error("in circuit at {path}: {source}")]
    Circuit { path: String, source: Box<Error> },
}

impl Error {
    /// Stable variant name, used by the CLI when reporting domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::RowOrderViolation { .. } => "RowOrderViolation",
            Error::ColumnOrderViolation { .. } => "ColumnOrderViolation",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::OffsetTooSmall(_) => "OffsetTooSmall",
            Error::OrderViolation { .. } => "OrderViolation",
            Error::UnderflowBelowOne => "UnderflowBelowOne",
            Error::SkewInputNotSupported(_) => "SkewInputNotSupported",
            Error::NotATableau(_) => "NotATableau",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotLittlewoodRichardson => "NotLittlewoodRichardson",
            Error::NotInImage(_) => "NotInImage",
            Error::NotSquare => "NotSquare",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::Overflow => "Overflow",
            Error::MapMismatch(_) => "MapMismatch",
            Error::Unreachable { .. } => "Unreachable",
            Error::WrongValue(_) => "WrongValue",
            Error::Circuit { source, .. } => source.name(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
