use thiserror::Error;

/// A failed command, classified by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("no reduction path from {from} to {to}")]
    NoPath { from: String, to: String },
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Infeasible(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::NoPath { .. } => 3,
            CliError::Budget(_) => 4,
            CliError::Infeasible(_) => 5,
        }
    }
}

impl From<pred_core::Error> for CliError {
    fn from(e: pred_core::Error) -> Self {
        use pred_core::Error as E;
        match e {
            E::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            E::Infeasible => CliError::Infeasible(e.to_string()),
            E::Step { source, .. } if matches!(*source, E::BudgetExceeded { .. } | E::Infeasible) => {
                CliError::from(*source)
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("invalid JSON: {e}"))
    }
}
