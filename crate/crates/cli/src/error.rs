use thiserror::Error;

/// Operational failures. Check failures are not errors; they are reported
/// through exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] tough_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("fixture file not found: {0}")]
    MissingFixtures(String),
    #[error("fixture line {line}: {message}")]
    BadFixture { line: usize, message: String },
    #[error("report serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}
