use std::fmt;
use std::io;
use std::path::PathBuf;

/// Everything that ends a command with exit status 2.
#[derive(Debug)]
pub enum CliError {
    Io {
        path: Option<PathBuf>,
        source: io::Error,
    },
    Parse {
        line: usize,
        message: String,
    },
    Profile(String),
    Usage(String),
    Core(subiso_core::Error),
    /// The decider refused or could not decide.
    Indeterminate(String),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path: Some(p), source } => write!(f, "{}: {source}", p.display()),
            CliError::Io { path: None, source } => write!(f, "{source}"),
            CliError::Parse { line, message } => write!(f, "line {line}: {message}"),
            CliError::Profile(m) => write!(f, "tolerance profile: {m}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e @ subiso_core::Error::NotNowhereOrthogonal { .. }) => {
                write!(f, "{e} (try --method quiver)")
            }
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Indeterminate(m) => write!(f, "indeterminate: {m}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io { source, .. } => Some(source),
            CliError::Core(e) => Some(e),
            _ => None,
        }
    }
}

impl From<subiso_core::Error> for CliError {
    fn from(e: subiso_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(source: io::Error) -> Self {
        CliError::Io { path: None, source }
    }
}

pub type CliResult<T> = Result<T, CliError>;
