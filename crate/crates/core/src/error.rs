use thiserror::Error;

use crate::diagram::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid circling: {0}")]
    InvalidCircling(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(NodeId),

    #[error("vertex {vertex} is not pressable: {reason}")]
    NotPressable { vertex: NodeId, reason: &'static str },

    #[error("circling {0:?} is not admissible")]
    NotAdmissible(Vec<NodeId>),

    #[error("root of vertex {0} has zero norm")]
    ZeroNorm(NodeId),

    #[error("enumeration of {requested} circlings exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },

    #[error("malformed json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

impl Error {
    /// Stable machine-readable name, shared by the command line and the
    /// HTTP service.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPressable { .. } => "not_pressable",
            Error::NotAdmissible(_) => "not_admissible",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Json(_) => "malformed",
            _ => "invalid_input",
        }
    }

    /// Process exit status for the command line.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotPressable { .. } => 3,
            Error::NotAdmissible(_) => 4,
            Error::CapExceeded { .. } => 5,
            _ => 2,
        }
    }
}
