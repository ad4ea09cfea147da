use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("malformed cycle notation: {0}")]
    Malformed(String),

    #[error("{what} exceeds cap of {cap} elements")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("subgroup generator {0} is not a member of the ambient group")]
    NotSubgroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("model file: {0}")]
    Format(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
