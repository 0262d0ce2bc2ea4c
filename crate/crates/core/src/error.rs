use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has zero weight")]
    ZeroWeight { u: usize, v: usize },
    #[error("edge ({u}, {v}) has non-finite weight")]
    NonFiniteWeight { u: usize, v: usize },
    #[error("edge ({u}, {u}) is a self-loop")]
    SelfLoop { u: usize },
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    IndexOutOfRange { u: usize, v: usize, n: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation requires an unweighted graph (all weights 1)")]
    NotUnweighted,
    #[error("rooted product needs one attachment per base vertex: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("attachment {index}: root {root} is not a vertex of a {n}-vertex graph")]
    BadRoot { index: usize, root: usize, n: usize },
    #[error("graph JSON: {0}")]
    Schema(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("cannot decompose an empty graph")]
    EmptyGraph,
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("vertex {u} out of range for {n} vertices")]
    VertexOutOfRange { u: usize, n: usize },
    #[error("two-adic valuation of zero is undefined")]
    ZeroInput,
    #[error("relation search over {count} values exceeds the budget of 6")]
    TooManyValues { count: usize },
    #[error("relation search needs at least one value")]
    NoValues,
    #[error("support of vertex {vertex} contains unrecognized eigenvalues {values:?}")]
    UnrecognizedEigenvalues { vertex: usize, values: Vec<f64> },
    #[error("oracle index {u} outside 1..={n}")]
    IndexOutOfRange { u: usize, n: usize },
    #[error("cycle oracle needs n >= 3, got {0}")]
    CycleTooShort(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SedentaryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("vertex {u} out of range for {n} vertices")]
    VertexOutOfRange { u: usize, n: usize },
    #[error("projector diagonal {diagonal} is not 1/2")]
    NotHalfCase { diagonal: f64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("positive support has {size} values, more than the 6 the subset search allows")]
    SupportTooLarge { size: usize },
    #[error("no vertex has two or more pendant neighbours")]
    NoPendantGroup,
    #[error("double transfer needs a non-bipartite base graph")]
    BipartiteInput,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("{family}: {message}")]
    BadParams { family: String, message: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FamilyError {
    pub(crate) fn bad(family: &str, message: impl Into<String>) -> Self {
        FamilyError::BadParams { family: family.to_string(), message: message.into() }
    }
}
