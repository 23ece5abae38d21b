use thiserror::Error;

/// Exit-code contract: 0 success, 2 configuration error, 3 I/O error,
/// 4 analysis failure.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {key}: {reason}")]
    Config { key: String, reason: String },

    #[error("i/o error: {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("analysis failure: {0}")]
    Analysis(String),
}

impl CliError {
    pub fn config(key: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Config {
            key: key.into(),
            reason: reason.into(),
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } => 2,
            CliError::Io { .. } => 3,
            CliError::Analysis(_) => 4,
        }
    }
}

impl From<qlg_core::Error> for CliError {
    fn from(e: qlg_core::Error) -> Self {
        CliError::config("run", e.to_string())
    }
}

impl From<nmr_model::Error> for CliError {
    fn from(e: nmr_model::Error) -> Self {
        CliError::config("error model", e.to_string())
    }
}

impl From<analysis_reference::Error> for CliError {
    fn from(e: analysis_reference::Error) -> Self {
        match e {
            analysis_reference::Error::LatticeTooSmall { .. } => {
                CliError::config("lattice_size", "lattice too small for calibration")
            }
            other => CliError::Analysis(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
