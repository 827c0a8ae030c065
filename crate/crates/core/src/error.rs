use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("budget exhausted before the budget-bound operation completed: {0}")]
    Budget(String),

    #[error("incomplete certification: {0}")]
    Incomplete(String),

    /// A solver or driver produced a verdict contradicting an established
    /// one. Never expected; indicates a bug.
    #[error("soundness violation: {0}")]
    Soundness(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
