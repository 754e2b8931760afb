use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular matrix")]
    Singular,

    #[error("degenerate simplex or cone: {0}")]
    Degenerate(String),

    #[error("invalid representation: {0}")]
    Representation(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("unsupported polyhedron: {0}")]
    UnsupportedPolyhedron(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
