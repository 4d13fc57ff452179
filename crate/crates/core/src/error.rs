use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),

    #[error("loop at vertex {0}")]
    Loop(Vertex),

    #[error("vertex label {0} appears in both operands")]
    LabelOverlap(Vertex),

    #[error("vertex {0} is not in the host graph")]
    NotASubset(Vertex),

    #[error("relabeling is not injective (label {0} used twice)")]
    NonInjectiveRelabel(Vertex),

    #[error("{what} supports at most {max} vertices, got {got}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("malformed decomposition tree: {0}")]
    Structural(String),

    #[error("search exceeded its budget of {limit} visited graphs")]
    ResourceExhausted { limit: usize },
}

impl Error {
    pub(crate) fn too_large(what: &'static str, max: usize, got: usize) -> Self {
        Error::TooLarge { what, max, got }
    }

    /// Errors caused by size bounds or search budgets rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::ResourceExhausted { .. })
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Graph6 { .. } | Error::EdgeList { .. })
    }
}
