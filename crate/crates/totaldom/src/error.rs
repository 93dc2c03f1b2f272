use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("self-loop ({v},{v}) is not allowed in a simple graph")]
    SelfLoop { v: usize },

    #[error("edge ({u},{v}) does not exist")]
    MissingEdge { u: usize, v: usize },

    #[error("graph order {order} exceeds the enumeration guard of {guard} vertices")]
    OrderGuardExceeded { order: usize, guard: usize },

    #[error("graph order {order} exceeds the reduction ceiling of {ceiling} vertices")]
    ReductionCeilingExceeded { order: usize, ceiling: usize },

    #[error("graph order {order} exceeds the isomorphism guard of {guard} vertices")]
    IsomorphismGuardExceeded { order: usize, guard: usize },

    #[error("graph has no total dominating set")]
    NoTotalDominatingSet,

    #[error("the zero polynomial has every integer as a root")]
    ZeroPolynomialRoots,

    #[error("identity precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge-list parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
