use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // graph construction and formats
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("order {0} exceeds the supported maximum of 128")]
    OrderTooLarge(usize),
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 short form supports order <= 62, got {0}")]
    UnsupportedOrder(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    // cut predicates and searches
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("complete graphs have no vertex separators")]
    CompleteGraph,
    #[error("exhaustive search supports order <= {max}, got {order}")]
    SearchTooLarge { order: usize, max: usize },

    // planar embeddings
    #[error("rotation system is not a sphere embedding: n - m + f = {0}")]
    NotSphereEmbedding(i64),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("{0:?} is not a face of the embedding")]
    NotAFace([usize; 3]),
    #[error("not a plane triangulation")]
    NotATriangulation,
    #[error("edge {0}-{1} does not lie on the chosen outer face")]
    EdgeNotOnChosenFace(usize, usize),

    // constructions
    #[error("parameter k = {k} too small (need k >= {min})")]
    KTooSmall { k: usize, min: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("glue tuple {0:?} does not induce a clique")]
    NotAClique(Vec<usize>),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    // linear programs
    #[error("n = {0} too small (need n >= 8)")]
    NTooSmall(usize),
    #[error("point does not assign variable {0}")]
    MissingVariable(String),
    #[error("dual point is infeasible for (D)")]
    InfeasibleCertificate,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("bad threshold expression {0:?}")]
    BadThreshold(String),

    // verification
    #[error("built-in enumeration supports n <= 7, got {0}")]
    OrderTooLargeForEnumeration(usize),
    #[error("census is defined for n in {{6, 7}}, got {0}")]
    UnsupportedCensusOrder(usize),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
