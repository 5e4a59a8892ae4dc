use thiserror::Error;

/// Failure modes shared by every module.
///
/// `Cap` is kept apart from input problems so the CLI can map it to its own
/// exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("identifier `{0}` names both a vertex and an edge")]
    NameCollision(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Parse(String),
    #[error("type error: {0}")]
    Type(String),
    #[error("resource cap exceeded: {0}")]
    Cap(String),
    #[error("decider disagreement: {0}")]
    Disagreement(String),
}

impl Error {
    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
