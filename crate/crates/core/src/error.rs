use thiserror::Error;

/// Every failure mode of the engine. Variants that carry a string keep the
/// offending token or a short diagnostic; message text is stable so the CLI
/// output stays byte-deterministic.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex {0:?} in input simplex")]
    DuplicateVertexInSimplex(String),
    #[error("unknown builtin complex {0:?}")]
    UnknownBuiltin(String),
    #[error("cone apex {0:?} is already a vertex")]
    ApexCollision(String),
    #[error("not a subcomplex: {0}")]
    NotASubcomplex(String),
    #[error("complex is not connected")]
    Disconnected,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("internal consistency failure: {0}")]
    InternalMismatch(String),
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("not a cover: {0}")]
    BadCover(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("degree overflow: {0}")]
    DegreeOverflow(String),
    #[error("not a self-map: source and target complexes differ")]
    NotSelfMap,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("complex is not orientable")]
    NotOrientable,
    #[error("not a closed pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("bad embedding: {0}")]
    BadEmbedding(String),
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}
