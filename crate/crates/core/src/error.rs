use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index label {label} out of range 1..={dim}")]
    IndexOutOfRange { label: usize, dim: usize },

    #[error("multi-index has {got} labels, tensor order is {order}")]
    OrderMismatch { got: usize, order: usize },

    #[error("vector has {got} coordinates, tensor dimension is {dim}")]
    DimensionMismatch { got: usize, dim: usize },

    #[error("index set must be a nonempty subset of 1..={dim}")]
    BadIndexSet { dim: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0} requires exact (rational) entries; use the simplex oracle for float tensors")]
    UnsupportedMode(&'static str),

    #[error("unsupported shape: order {order}, dimension {dim}")]
    UnsupportedShape { order: usize, dim: usize },

    #[error("lattice has {count} points at resolution {resolution}, above the cap of {cap}")]
    LatticeTooLarge {
        count: u128,
        resolution: u32,
        cap: u128,
    },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
