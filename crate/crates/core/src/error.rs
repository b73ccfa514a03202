use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("edge index {index} out of range (hypergraph has {m} edges)")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("edge index {0} listed twice in cover")]
    DuplicateIndex(usize),

    #[error("cannot reduce edgeless hypergraph")]
    EdgelessReduce,

    #[error("grouped set must be a nonempty subset of the vertex set")]
    InvalidGroupSet,

    #[error("closure blow-up: more than {cap} closure edges")]
    ClosureBlowUp { cap: usize },

    #[error("budget exceeded after {0} search nodes")]
    BudgetExceeded(u64),

    #[error("hypergraph is not reduced")]
    NotReduced,

    #[error("hypergraph is not {0}-flat")]
    NotFlat(usize),

    #[error("parameter {name} out of range: {msg}")]
    BadParameter { name: &'static str, msg: String },

    #[error("cover does not verify against {0}")]
    InvalidCover(&'static str),

    #[error("witness to equivalence-violation: {0}")]
    EquivalenceViolation(String),

    #[error("uncoverable vertex {0}")]
    Uncoverable(u32),

    #[error("brute force guard exceeded: {what} = {got} > {max}")]
    GuardExceeded { what: &'static str, got: usize, max: usize },

    #[error("generator gave up after {0} retries")]
    RejectionBudget(usize),

    #[error("invalid constraint-cover instance: {0}")]
    InvalidInstance(String),

    #[error("cover shape counterexample: {0}")]
    CoverShape(String),

    #[error("solution rejected at {0}")]
    Rejected(crate::reductions::Violation),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
