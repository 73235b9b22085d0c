use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("action is not admissible at the given state")]
    NotAdmissible,

    #[error("workspace is not finite; exhaustive enumeration needs a finite workspace")]
    WorkspaceNotFinite,

    #[error("complex was truncated at {cap} vertices; query needs the complete complex")]
    Truncated { cap: usize },

    #[error("state is not a vertex of the complex")]
    UnknownVertex,

    #[error("cube is not a cell of the complex")]
    UnknownCube,

    #[error("shape complexes need an obstacle-free homogeneous workspace")]
    ShapeRequiresHomogeneousWorkspace,

    #[error("generator `{id}`: {reason}")]
    InvalidGenerator { id: String, reason: String },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("move {index} is not admissible")]
    InadmissibleMove { index: usize },

    #[error("invalid cube path at step {index}: {reason}")]
    InvalidPath { index: usize, reason: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{what} has {size} cells, above the dense elimination limit of {limit}")]
    TooLarge { what: String, size: usize, limit: usize },

    #[error("target state is not reachable from the source state")]
    Disconnected,

    #[error("state is empty")]
    EmptyState,

    #[error("wrong lattice: expected {expected}, found {found}")]
    WrongLattice { expected: String, found: String },

    #[error("{0}")]
    OutOfRange(String),

    #[error("not a closed surface: {0}")]
    NotASurface(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

impl Error {
    /// The variant name, for tools that report errors by kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAdmissible => "NotAdmissible",
            Error::WorkspaceNotFinite => "WorkspaceNotFinite",
            Error::Truncated { .. } => "Truncated",
            Error::UnknownVertex => "UnknownVertex",
            Error::UnknownCube => "UnknownCube",
            Error::ShapeRequiresHomogeneousWorkspace => "ShapeRequiresHomogeneousWorkspace",
            Error::InvalidGenerator { .. } => "InvalidGenerator",
            Error::InvalidState(_) => "InvalidState",
            Error::InadmissibleMove { .. } => "InadmissibleMove",
            Error::InvalidPath { .. } => "InvalidPath",
            Error::Parse { .. } => "Parse",
            Error::TooLarge { .. } => "TooLarge",
            Error::Disconnected => "Disconnected",
            Error::EmptyState => "EmptyState",
            Error::WrongLattice { .. } => "WrongLattice",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotASurface(_) => "NotASurface",
            Error::UnknownGenerator(_) => "UnknownGenerator",
        }
    }
}
