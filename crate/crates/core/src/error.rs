use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {{{0}, {1}}}")]
    ParallelEdge(usize, usize),
    #[error("vertex {0} is isolated; the 2-CNF of a graph needs every vertex on an edge")]
    IsolatedVertex(usize),
    #[error("clause ({0}, {1}) does not have two distinct variables")]
    DegenerateClause(usize, usize),
    #[error("variable {var} is out of range for {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("matching edges share endpoint {0}")]
    SharedEndpoint(usize),
    #[error("variable {0} occurs with both signs")]
    ContradictoryLiterals(usize),
    #[error("{what} needs {needed} but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("tree height {r} is below the family threshold 5*ceil(log2 {k}) = {threshold}")]
    HeightBelowThreshold { r: u32, k: u64, threshold: u32 },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("tree height {r} is below ceil(log2 {p}) = {threshold}")]
    StructuralBoundDomain { r: u32, p: u64, threshold: u32 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid branching program: {0}")]
    InvalidProgram(String),
    #[error("branching program is not uniform")]
    NotUniform,
    #[error("order is not a permutation of the {0} variables")]
    BadOrder(usize),
    #[error("node {0} is not reachable from the root")]
    Unreachable(usize),
    #[error("no distant independent set of size {0} exists")]
    NoDis(usize),
    #[error("a satisfying assignment is not covered by any distant independent set of size {0}")]
    Uncoverable(usize),
    #[error("certificate construction failed: {0}")]
    Certificate(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
