use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("parse error{}: {message}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    Parse {
        line: Option<usize>,
        message: String,
    },
    #[error("{operation} supports at most {cap} vertices, got {n}")]
    SizeLimit {
        operation: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            message: message.into(),
        }
    }

    /// Attaches a 1-based line number to a parse error, leaving other errors alone.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { message, .. } => Error::Parse {
                line: Some(line),
                message,
            },
            other => other,
        }
    }
}

pub(crate) fn check_cap(operation: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeLimit { operation, n, cap })
    } else {
        Ok(())
    }
}
