use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants carry enough context (edge ids, vertex labels, counts) to produce
/// a useful diagnostic without access to the input that caused them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {edge} has non-positive or non-finite length {length}")]
    NonpositiveLength { edge: String, length: String },
    #[error("edge {edge} refers to unknown vertex {vertex}")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("weighted graph contains a loop at vertex {0}")]
    LoopPresent(usize),
    #[error("vertex {0} has zero weighted degree")]
    IsolatedVertex(usize),
    #[error("matrix is not symmetric (deviation {0:e})")]
    NotSymmetric(f64),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("graph has {vertices} vertices, above the brute-force cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("edge {edge} is covered {count} times, expected {expected}")]
    NotUniform { edge: String, count: usize, expected: usize },
    #[error("cover element {0} is empty or disconnected")]
    DisconnectedElement(String),
    #[error("cover refers to unknown edge {0}")]
    UnknownEdge(String),
    #[error("graph is not bridgeless: {0}")]
    NotBridgeless(String),
    #[error("graph has no rotation system")]
    NoRotation,
    #[error("invalid rotation system at vertex {vertex}: {reason}")]
    InvalidRotation { vertex: String, reason: String },
    #[error("eta strategy {strategy} is not applicable to cover element {element}")]
    EtaUnavailable { strategy: String, element: String },
    #[error("bad pumpkin chain: {0}")]
    BadSpec(String),
    #[error("graph is not a pumpkin chain: {0}")]
    NotAChain(String),
    #[error("graph is not equilateral")]
    NotEquilateral,
    #[error("requested {requested} eigenvalues but only {available} lie on the principal branch")]
    CountExceedsBranch { requested: usize, available: usize },
    #[error("edge lengths are not commensurable with mesh {0}")]
    IncommensurableLengths(String),
    #[error(
        "only {available} of {requested} eigenvalues lie below the validity threshold {threshold}; shrink the mesh"
    )]
    ThresholdExceeded { requested: usize, available: usize, threshold: f64 },
    #[error("finite differences disagree across meshes by {disagreement:e} (tolerance {tolerance:e})")]
    MeshTooCoarse { disagreement: f64, tolerance: f64 },
    #[error("unknown analytic kind `{0}`")]
    UnknownKind(String),
    #[error("graph is not 2-edge-connected")]
    NotDoublyConnected,
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonpositiveLength { .. } => "NonpositiveLength",
            Error::UnknownEndpoint { .. } => "UnknownEndpoint",
            Error::Disconnected => "Disconnected",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::BadParameter(_) => "BadParameter",
            Error::LoopPresent(_) => "LoopPresent",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::NotSymmetric(_) => "NotSymmetric",
            Error::NoConvergence(_) => "NoConvergence",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotUniform { .. } => "NotUniform",
            Error::DisconnectedElement(_) => "DisconnectedElement",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::NotBridgeless(_) => "NotBridgeless",
            Error::NoRotation => "NoRotation",
            Error::InvalidRotation { .. } => "InvalidRotation",
            Error::EtaUnavailable { .. } => "EtaUnavailable",
            Error::BadSpec(_) => "BadSpec",
            Error::NotAChain(_) => "NotAChain",
            Error::NotEquilateral => "NotEquilateral",
            Error::CountExceedsBranch { .. } => "CountExceedsBranch",
            Error::IncommensurableLengths(_) => "IncommensurableLengths",
            Error::ThresholdExceeded { .. } => "ThresholdExceeded",
            Error::MeshTooCoarse { .. } => "MeshTooCoarse",
            Error::UnknownKind(_) => "UnknownKind",
            Error::NotDoublyConnected => "NotDoublyConnected",
            Error::Parse { .. } => "ParseError",
            Error::Io(_) => "Io",
        }
    }
}
