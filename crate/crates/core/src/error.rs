use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown search `{0}`")]
    UnknownSearch(String),

    #[error(
        "grid too large: estimated {estimate} big-integer multiplications exceeds budget {budget}"
    )]
    BudgetExceeded { estimate: u128, budget: u128 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
