use thiserror::Error;

/// CLI-level failures, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("capacity error: {0}")]
    Capacity(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<chiral_core::Error> for CliError {
    fn from(e: chiral_core::Error) -> Self {
        use chiral_core::Error as E;
        match &e {
            E::CapExceeded { .. }
            | E::IntersectionCapExceeded { .. }
            | E::BudgetExceeded { .. }
            | E::OrderOverflow
            | E::DegreeTooLarge { .. } => CliError::Capacity(e.to_string()),
            E::InvalidInput(_) | E::NotABijection(_) => CliError::Parse(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
