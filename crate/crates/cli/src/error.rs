use std::fmt;
use std::path::{Path, PathBuf};

/// Pipeline failure. `Display` is one line: `error[<kind>]: <context>: <message>`.
#[derive(Debug)]
pub enum CliError {
    Io { path: PathBuf, source: std::io::Error },
    Parse { path: PathBuf, line: Option<usize>, message: String },
    Input(String),
    Config(String),
    Model(biclayout::Error),
}

impl CliError {
    /// Machine-readable kind tag used in the diagnostic prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Input(_) => "input",
            CliError::Config(_) => "config",
            CliError::Model(_) => "model",
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub(crate) fn parse(path: &Path, line: Option<usize>, message: impl Into<String>) -> Self {
        CliError::Parse {
            path: path.to_path_buf(),
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: ", self.kind())?;
        let text = match self {
            CliError::Io { path, source } => format!("{}: {source}", path.display()),
            CliError::Parse { path, line: Some(l), message } => format!("{}:{l}: {message}", path.display()),
            CliError::Parse { path, line: None, message } => format!("{}: {message}", path.display()),
            CliError::Input(m) | CliError::Config(m) => m.clone(),
            CliError::Model(e) => e.to_string(),
        };
        // keep diagnostics on a single line whatever the underlying message holds
        f.write_str(&text.replace(['\n', '\r'], " "))
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io { source, .. } => Some(source),
            CliError::Model(e) => Some(e),
            _ => None,
        }
    }
}

impl From<biclayout::Error> for CliError {
    fn from(e: biclayout::Error) -> Self {
        CliError::Model(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
