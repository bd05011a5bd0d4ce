use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: form has rank {rank}, class has {len} coordinates")]
    DimensionMismatch { rank: usize, len: usize },

    #[error("invalid intersection form: {0}")]
    InvalidForm(String),

    #[error("invalid ambient profile: {0}")]
    InvalidAmbient(String),

    #[error("invalid root of unity {r}/{m}: need 1 <= r <= m-1")]
    InvalidRoot { r: i64, m: i64 },

    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),

    #[error("torus knot parameter must be odd, got {0}")]
    EvenTorusParameter(i64),

    #[error("knot {knot} has no signature sample at {r}/{m}")]
    MissingSample { knot: String, r: i64, m: i64 },

    #[error("Arf invariant is not computable for {0}")]
    UnsupportedArf(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(i64),

    #[error("{0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
