use thiserror::Error;

/// Crate-wide error type.
///
/// Variants fall into three classes, which the CLI maps to distinct exit
/// codes: malformed input (`InvalidGraph`, `Parse`), violated preconditions
/// and resource guards (most of the rest), and internal invariant failures
/// (`Internal`) which always indicate a bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex id {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph contains a cycle; operation is restricted to forests")]
    NotAForest,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has {n} vertices, exceeding the exact-count ceiling {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("brute force requires at most {limit} vertices, got {n}")]
    BruteForceTooLarge { n: usize, limit: usize },

    #[error("membership pattern set has {k} vertices, at most {limit} allowed")]
    PatternSetTooLarge { k: usize, limit: usize },

    #[error("tree enumeration supports 1..={limit} vertices, got {n}")]
    EnumerationOutOfRange { n: usize, limit: usize },

    #[error("value {value} is outside the decidable range (needs trees on more than {limit} vertices)")]
    NotDecidable { value: String, limit: usize },

    #[error("bound hypothesis violated: the tree is a caterpillar")]
    IsCaterpillar,

    #[error("bound hypothesis violated: off-path matching number q={q} is below 3")]
    MatchingTooSmall { q: usize },

    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
