use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the unit monomial cannot be a generator (unit ideal is unsupported)")]
    UnitGenerator,

    #[error("variable `{0}` is not in the ambient variable set")]
    VariableOutsideAmbient(String),

    #[error("variable `{0}` appears twice in the ambient variable set")]
    DuplicateVariable(String),

    #[error("ideals live in different ambient rings")]
    AmbientMismatch,

    #[error("supports overlap in `{0}`; the external factor must use fresh variables")]
    OverlappingSupport(String),

    #[error("ideal already contains polarized variables (e.g. `{0}`)")]
    AlreadyPolarized(String),

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("edge {0}->{1} is not in the graph")]
    MissingEdge(String, String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has no edges")]
    EmptyEdgeSet,

    #[error("sizing guard exceeded: {what} is {actual}, limit {limit}")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("`{0}` is not an lcm of generators of the ideal")]
    NotACandidate(String),

    #[error("the void complex has no reduced homology")]
    VoidComplex,

    #[error("unsatisfiable parameters: {0}")]
    Unsatisfiable(String),

    #[error("graph is not a supported cyclic class: {0}")]
    NotCyclic(String),

    #[error("edge {0}->{1} does not lie on the cycle")]
    EdgeNotOnCycle(String, String),

    #[error("generators of J and K do not partition the generators of I")]
    NotAPartition,
}

impl Error {
    pub(crate) fn parse(pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
