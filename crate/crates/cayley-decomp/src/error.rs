use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid generator set: identity element {identity} present")]
    GeneratorContainsIdentity { identity: usize },

    #[error("invalid generator set: element {element} present but its inverse {inverse} is not")]
    GeneratorNotSymmetric { element: usize, inverse: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid multiplicative function: {0}")]
    InvalidCharacter(String),

    #[error("size cap exceeded: {what} has size {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid input spec: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
