use thiserror::Error;

/// Failure of a library call.
///
/// `Validation` means the caller handed in something malformed (bad prime,
/// non-admissible weight, length mismatch). `Contract` means the input was
/// well formed but an operation's precondition does not hold for it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{code}: {msg}")]
    Validation { code: &'static str, msg: String },
    #[error("{code}: {msg}")]
    Contract { code: &'static str, msg: String },
}

impl Error {
    pub fn validation(code: &'static str, msg: impl Into<String>) -> Self {
        Error::Validation {
            code,
            msg: msg.into(),
        }
    }

    pub fn contract(code: &'static str, msg: impl Into<String>) -> Self {
        Error::Contract {
            code,
            msg: msg.into(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            Error::Validation { code, .. } | Error::Contract { code, .. } => code,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Error::Validation { msg, .. } | Error::Contract { msg, .. } => msg,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation { .. } => 1,
            Error::Contract { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
