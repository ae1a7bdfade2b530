use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("classes live on different quadrics (Q^{0} and Q^{1})")]
    QuadricMismatch(usize, usize),
    #[error("class is not concentrated in top degree")]
    NotTopDegree,
    #[error("{what} is not available on Q^{n}")]
    NotOnQuadric { what: String, n: usize },
    #[error("{0} carries no Chern data")]
    NoChernData(String),
    #[error("first Chern coefficient {found} does not match the twist {expected}")]
    TwistMismatch { expected: String, found: String },
    #[error("formula is only implemented for n = 5 (got n = {0})")]
    UnsupportedDimension(u32),
    #[error("the surface-scroll system is singular at d = 8; use the one-parameter family")]
    SingularAtDegreeEight,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}
