use thiserror::Error;

use crate::graph::ValidationReport;
use crate::group::ActionReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid separated graph: {0}")]
    InvalidGraph(ValidationReport),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("vertex `{0}` carries more than one separation set")]
    NotOrdinary(String),

    #[error("group element `{element}` does not belong to {group}")]
    NotInGroup { element: String, group: String },
    #[error("cannot combine elements of different groups: {0}")]
    GroupMismatch(String),
    #[error("group {0} cannot be enumerated")]
    UnsupportedGroup(String),
    #[error("edge `{0}` has no label")]
    MissingLabel(String),
    #[error("invalid action: {0}")]
    InvalidAction(ActionReport),
    #[error("action is not free: {element} fixes vertex `{vertex}`")]
    NotFree { element: String, vertex: String },

    #[error("elements live in different algebras")]
    ContextMismatch,
    #[error("edge `{edge}` is not in the separation set it was chosen for")]
    InvalidChoice { edge: String },
    #[error("the skew-product algebra does not use the lifted edge choice (e_X, g) at set of `{edge}`")]
    IncompatibleChoice { edge: String },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse { column, message: message.into() }
    }
}
