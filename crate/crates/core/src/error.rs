use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {from} does not divide {to}")]
    Embed { from: u32, to: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown group descriptor {0:?}")]
    UnknownGroup(String),
    #[error("corrupted group data: {0}")]
    Corrupt(String),
    #[error("class function is not self-dual")]
    NotSelfDual,
    #[error("group mismatch")]
    GroupMismatch,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("operation requires the trivial weight xi = gamma_0")]
    NeedsTrivialXi,
    #[error("no affine ADE diagram matches the Cartan matrix")]
    NoAdeMatch,
    #[error("{0}")]
    Io(String),
}
