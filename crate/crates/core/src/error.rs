use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected n={expected}, found n={found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("bad dimension {0}")]
    BadDimension(usize),

    #[error("dimension {n} exceeds the supported maximum {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("group closure exceeds cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("the identity element has no minimum distance")]
    IdentityElement,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("graph is not bipartite (odd closed walk of length {})", .witness.len() - 1)]
    NotBipartite { witness: Vec<usize> },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph with {vertices} vertices exceeds the limit of {max}")]
    TooLarge { vertices: usize, max: usize },

    #[error("not a rectagraph with a_2 = 0 and c_3 = 3: {0}")]
    NotRectagraph(String),

    #[error("2-path {path:?} lies in {count} quadrangles, expected exactly one")]
    QuadrangleAmbiguous { path: [usize; 3], count: usize },

    #[error("lift is inconsistent at hypercube vertex {vertex}")]
    InconsistentLift { vertex: u32 },

    #[error("map is not a covering: {0}")]
    NotCovering(String),

    #[error("deck transformation reconstruction failed: {0}")]
    ReconstructionFailed(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unknown example '{0}'")]
    UnknownExample(String),

    #[error("unknown claim '{0}'")]
    UnknownClaim(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable machine-readable code, used as the CLI error prefix.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::BadDimension(_) => "BadDimension",
            Error::DimensionTooLarge { .. } => "DimensionTooLarge",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::IdentityElement => "IdentityElement",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::Unsupported(_) => "Unsupported",
            Error::NotBipartite { .. } => "NotBipartite",
            Error::NotConnected => "NotConnected",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotRectagraph(_) => "NotRectagraph",
            Error::QuadrangleAmbiguous { .. } => "QuadrangleAmbiguous",
            Error::InconsistentLift { .. } => "InconsistentLift",
            Error::NotCovering(_) => "NotCovering",
            Error::ReconstructionFailed(_) => "ReconstructionFailed",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::UnknownExample(_) => "UnknownExample",
            Error::UnknownClaim(_) => "UnknownClaim",
            Error::Parse { .. } => "ParseError",
        }
    }
}
