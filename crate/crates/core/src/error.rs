use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CordialError {
    #[error("vertex count {0} outside 1..=16")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge bitset has bits beyond C({n},2)")]
    EdgeBitsOutOfRange { n: usize },
    #[error("size mismatch: {left} vs {right} vertices")]
    SizeMismatch { left: usize, right: usize },
    #[error("unknown graph tag `{0}`")]
    UnknownTag(String),
    #[error("not a permutation")]
    NotAPermutation,
    #[error("{support} non-isolated vertices exceeds the canonicalization limit of {limit}")]
    CanonicalTooLarge { support: usize, limit: usize },
    #[error("enumeration of {m}-edge graphs on {n} vertices is out of budget")]
    EnumerationTooLarge { n: usize, m: usize },
    #[error("edge count {m} outside 0..=C({n},2)")]
    EdgeCount { n: usize, m: usize },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("expected {expected} label counts, got {got}")]
    CountsLength { expected: usize, got: usize },
    #[error("signed-difference labels need an orientation")]
    MissingOrientation,
    #[error("orientation has {got} bits, graph has {expected} edges")]
    OrientationLength { expected: usize, got: usize },
    #[error("vertex labeling is not friendly on the graph's support")]
    UnfriendlyLabeling,
    #[error("{edges} edges exceeds the brute-force orientation limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("out of budget: {0}")]
    Budget(String),
    #[error("bound is defined only for n >= {min}, got {n}")]
    BoundDomain { n: usize, min: usize },
    #[error("malformed operator table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, CordialError>;
