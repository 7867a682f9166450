use thiserror::Error;

/// Errors raised while building or evaluating a prearithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A map or operation was applied outside its declared carrier.
    #[error("domain violation: {0}")]
    Domain(String),

    /// The coprojector has no preimage: every projected value exceeds `y`.
    #[error("{y} is below the range of the projector (smallest projected value is {min})")]
    BelowRange { y: String, min: String },

    /// The scalar type cannot hold an intermediate value.
    #[error("overflow in {0} arithmetic")]
    Overflow(&'static str),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("n-ary operation needs at least one operand")]
    EmptyOperands,

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
