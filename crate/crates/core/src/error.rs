use thiserror::Error;

/// Errors produced by the library.
///
/// A failed verification is not an error: [`crate::verify::verify_decomposition`]
/// returns a report. `Construction` is reserved for generators whose own
/// post-conditions fail, which indicates a bug in a recipe or in curated data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("unsupported part layout {0:?}: expected [a,b], [1,a,b], [2,a,b] or [1,1,a,b]")]
    UnsupportedLayout(Vec<u32>),

    #[error("graph has {vertices} vertices, naive oracle limit is {limit}")]
    UnsupportedSize { vertices: usize, limit: usize },

    #[error("construction failed ({context}): {detail}")]
    Construction { context: String, detail: String },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn construction(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Construction {
            context: context.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
