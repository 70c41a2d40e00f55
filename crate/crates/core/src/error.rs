use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("arithmetic overflow in exact integer computation")]
    ArithmeticOverflow,
    #[error("box counts sum to {got}, expected {expected}")]
    SizeMismatch { expected: u64, got: u64 },
    #[error("computation exceeds configured bounds: {0}")]
    BoundsExceeded(String),
    #[error("unsupported product: {0}")]
    UnsupportedProduct(String),
    #[error("unsupported context: {0}")]
    UnsupportedContext(String),
}

pub type Result<T> = std::result::Result<T, Error>;
