use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("operands belong to different algebras ({left} vs {right})")]
    OwnerMismatch { left: String, right: String },

    #[error("tensor factor lists differ ({left} vs {right})")]
    FactorMismatch { left: String, right: String },

    #[error("no image given for generator {generator} under {map}")]
    MissingGeneratorImage { map: String, generator: String },

    #[error("{0} has no finite basis")]
    InfiniteBasis(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("{0} has no antipode")]
    NoAntipode(String),

    #[error("{0} is not commutative")]
    NotCommutative(String),

    #[error("no certified inverse: {0}")]
    NoCertifiedInverse(String),

    #[error("relation of degree {relation_degree} exceeds bound {bound}")]
    BoundTooSmall { relation_degree: usize, bound: usize },

    #[error("element of degree {degree} exceeds bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid structure table: {0}")]
    InvalidTable(String),

    #[error("line {line}, column {column}: {message} (at '{token}')")]
    Parse {
        line: usize,
        column: usize,
        token: String,
        message: String,
    },

    #[error("unknown scenario '{0}'")]
    UnknownScenario(String),

    #[error("{0}")]
    Usage(String),
}
