use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` declared more than once")]
    DuplicateVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("no value assigned to vertex `{0}`")]
    MissingAssignment(String),
    #[error("assignment has {got} values but the graph has {expected} vertices")]
    AssignmentLength { expected: usize, got: usize },
    #[error("negative coordinate at vertex `{0}`")]
    NegativeCoordinate(String),
    #[error("coordinate at vertex `{0}` lies outside [0, 1]")]
    CoordinateOutOfRange(String),
    #[error("projection weight at vertex `{0}` lies outside (0, 1]")]
    ProjectionOutOfRange(String),
    #[error("direction vector is identically zero")]
    ZeroDirection,
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("{0} must be strictly positive")]
    NonPositiveParameter(&'static str),
    #[error("invalid algebra data for vertex `{vertex}`: {reason}")]
    InvalidSpec { vertex: String, reason: String },
    #[error("invalid summand selection: {0}")]
    InvalidSelection(String),
    #[error("{what}: {count} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        count: u128,
        cap: u128,
    },
    #[error("boundary point has vanishing gradient but no join split was found")]
    MissingWitness,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
