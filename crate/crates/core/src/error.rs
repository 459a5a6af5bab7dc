use thiserror::Error;

/// Errors raised by the engine. The CLI maps these onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Unsupported Cartan type / rank combination.
    #[error("unsupported configuration: {0}")]
    Config(String),

    /// A generator word that does not parse against the chosen system.
    #[error("invalid word {word:?}: {reason} at position {position}")]
    Word {
        word: String,
        position: usize,
        reason: String,
    },

    /// A well-formed request whose answer is undefined, e.g. the projective
    /// dimension of a zero module.
    #[error("domain error: {0}")]
    Domain(String),

    /// Misuse of the API, e.g. mixing bases.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
