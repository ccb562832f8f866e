use std::io;

/// Everything that can stop a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("malformed input at `{path}`: {message}")]
    Json { path: String, message: String },
    #[error("invalid input at `{path}`: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] gpatoms_core::Error),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn input(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Input {
            path: path.into(),
            message: message.into(),
        }
    }

    /// 2 when an enumeration cap was hit, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(gpatoms_core::Error::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }
}
