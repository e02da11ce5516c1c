use thiserror::Error;

/// Errors surfaced by the front end, one per exit code.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }

    /// A core error caused by a command-line argument.
    pub fn from_arg(e: scrows::Error) -> Self {
        match e {
            scrows::Error::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }

    /// A core error caused by file contents.
    pub fn from_input(e: scrows::Error) -> Self {
        match e {
            scrows::Error::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
