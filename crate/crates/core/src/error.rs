use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence index {index} out of range (|index| must be at most {bound})")]
    IndexOutOfRange { index: i64, bound: i64 },

    #[error("identity `{identity}` is missing parameter `{name}`")]
    MissingParameter {
        identity: &'static str,
        name: &'static str,
    },

    #[error("identity `{identity}` requires a nonnegative upper limit, got {limit}")]
    NegativeUpperLimit { identity: &'static str, limit: i64 },

    #[error("cycle length must be between {min} and {max}, got {n}")]
    InvalidCycleLength { n: usize, min: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("operation needs two distinct vertices")]
    SameVertex,

    #[error("graph is disconnected, so hitting times are infinite")]
    Disconnected,

    #[error("linear system is singular")]
    SingularMatrix,

    #[error(
        "enumeration limited to {max_vertices} vertices and {max_edges} edges, \
         got {vertices} and {edges}"
    )]
    EnumerationGuard {
        vertices: usize,
        edges: u64,
        max_vertices: usize,
        max_edges: u64,
    },

    #[error("walk exceeded {cap} steps without reaching the target; graph is probably disconnected")]
    StepCapExceeded { cap: u64 },

    #[error("need at least 2 walks to form a standard error, got {0}")]
    TooFewWalks(u64),

    #[error("tree-count formula produced the non-integer value {0}")]
    NonIntegerTreeCount(String),
}
