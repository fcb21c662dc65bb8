use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{name}` at {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomials have mixed degrees")]
    MixedDegrees,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("all coordinates of a projective point are zero")]
    ZeroPoint,
    #[error("ideal is the unit ideal")]
    ImproperIdeal,
    #[error("empty generator system")]
    EmptySystem,
    #[error("point not on variety: generator {index} does not vanish")]
    PointNotOnVariety { index: usize },
    #[error("point is not smooth: jacobian rank {rank}, codimension {codim}")]
    NotSmooth { rank: usize, codim: usize },
    #[error("polynomial is not a member of the ideal")]
    NotAMember,
    #[error("degree constraint violated: {0}")]
    DegreeConstraint(String),
    #[error("certificate does not belong to this input (hash mismatch)")]
    HashMismatch,
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error("malformed ideal file at line {line}: {message}")]
    IdealFile { line: usize, message: String },
    #[error("groebner basis computation timed out")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
