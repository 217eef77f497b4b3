use thiserror::Error;

use crate::pattern::PatternReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid vertex name {0:?}")]
    InvalidName(String),

    #[error("vertex {0:?} declared twice")]
    DuplicateVertex(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("vertex order is not a permutation of the vertex sequence")]
    NotPermutation,

    #[error("edge has no vertices")]
    EmptyEdge,

    #[error("vertex {0:?} is both a head and a tail of the same edge")]
    HeadTailOverlap(String),

    #[error("vertex {0:?} listed twice in the same edge")]
    RepeatedInEdge(String),

    #[error("edge index {index} out of range ({count} edges)")]
    EdgeIndex { index: usize, count: usize },

    #[error("edge pair ({0}, {1}) is not ordered i < j")]
    UnorderedPair(usize, usize),

    /// An edge does not have the head/tail shape an operation requires.
    #[error("edge {edge} does not have shape {expected}")]
    EdgeShape { edge: usize, expected: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(Box<PatternReport>),

    #[error("coloring covers {found} vertices, hypergraph has {expected}")]
    ColoringSize { expected: usize, found: usize },

    #[error("vertex {0:?} has no color")]
    Unassigned(String),

    #[error("color {color} out of range for k = {k}")]
    ColorRange { color: usize, k: usize },

    #[error("number of colors must be at least 1")]
    NoColors,

    #[error("{what} = {value} exceeds the limit {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid {what}: {detail}")]
    Parameter { what: &'static str, detail: String },

    #[error("head-star of {vertex:?}: {detail}")]
    HeadStar { vertex: String, detail: String },

    #[error("shadow edge {{{u}, {v}}} gets conflicting roles from edges {first} and {second}")]
    RoleConflict {
        u: String,
        v: String,
        first: usize,
        second: usize,
    },

    #[error("shadow edge {{{u}, {v}}} is not colored")]
    UncoloredShadowEdge { u: String, v: String },
}
