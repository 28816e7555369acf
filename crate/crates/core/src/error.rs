use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factor index {0} is not part of the presentation")]
    InvalidFactor(usize),

    #[error("duplicate name `{0}` in presentation")]
    DuplicateName(String),

    #[error("finite cyclic factor `{name}` must have order at least 2 (got {order})")]
    InvalidOrder { name: String, order: u64 },

    #[error("{0} is undefined for the identity element")]
    IdentityInput(&'static str),

    #[error("basis element e{index} is out of range for a module of rank {rank}")]
    BasisOutOfRange { index: usize, rank: usize },

    #[error("w1 cannot send `{0}` to -1: its factor has odd order")]
    InvalidW1(String),

    #[error("w1/w2 data does not match the presentation: {0}")]
    InvalidCharacteristic(String),

    #[error("relation does not apply: {0}")]
    Inapplicable(String),

    #[error("length mismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
