use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("cut does not separate {from} and {to} at M = {cut}")]
    CutDoesNotSeparate { cut: usize, from: String, to: String },

    #[error("hom-set count overflowed u64")]
    CountOverflow,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
