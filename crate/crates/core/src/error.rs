use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants fall in two groups: refusals (the caller handed us something
/// outside an operation's contract) and internal breaches (a checked
/// invariant failed, which means a bug). [`Error::is_refusal`] tells them
/// apart; the CLI maps them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set belongs to a graph on {found} vertices, expected {expected}")]
    HostMismatch { expected: usize, found: usize },

    #[error("vertex {0} is not a member of the set")]
    NotAMember(usize),

    #[error("malformed graph6 at byte offset {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("instance has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("set is not a minimal dominating set")]
    NotMinimalDominating,

    #[error("set is not a maximal independent set")]
    NotMaximalIndependent,

    #[error("graph contains an induced 2K2 on edges {0:?} and {1:?}")]
    Contains2K2((usize, usize), (usize, usize)),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("vertex {0} has fewer than two neighbours in U; complete the graph to a Q-graph first")]
    NotExactQGraph(usize),

    #[error("refusing to enumerate {count} clique bipartitions (limit {limit})")]
    TooManyColorings { count: u128, limit: u128 },

    #[error("internal invariant breached: {0}")]
    Invariant(String),
}

impl Error {
    /// True when the error is a contract refusal rather than a bug.
    pub fn is_refusal(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
