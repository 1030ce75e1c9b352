use thiserror::Error;

/// Errors raised by the library. Mathematical verdicts (axiom failures,
/// poles, failed degeneration conditions) are report values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("unsupported conductor {0}")]
    UnsupportedConductor(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("linear map is singular")]
    SingularMap,
    #[error("missing antipode")]
    MissingAntipode,
    #[error("given vector is not a unit of the multiplication")]
    NotAUnit,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("unknown catalog id {0:?}")]
    UnknownCatalogId(String),
    #[error("grading violation: {0}")]
    Grading(String),
    #[error("family is not a bialgebra family: {0}")]
    NotABialgebraFamily(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
