use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{location}: parse error: {message}")]
    Parse { location: String, message: String },
    #[error("{location}: schema error: {message}")]
    Schema { location: String, message: String },
    #[error("{location}: fixture missing: {name}")]
    FixtureMissing { location: String, name: String },
    #[error("{location}: {source}")]
    Compute {
        location: String,
        source: kstab_core::Error,
    },
}

impl CliError {
    /// Parse and schema problems are usage errors; the rest are case failures.
    pub fn is_usage(&self) -> bool {
        matches!(self, CliError::Parse { .. } | CliError::Schema { .. })
    }
}
