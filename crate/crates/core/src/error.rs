use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("no edge between {0} and {1}")]
    UnknownEdge(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The input falls outside the range where the construction is guaranteed.
    #[error("{0}")]
    Precondition(String),

    /// A class would receive a third edge at some vertex.
    #[error("class {class} would have degree 3 at vertex {vertex}")]
    DegreeOverflow { vertex: usize, class: usize },

    #[error("edge {0} is already colored")]
    AlreadyColored(usize),

    #[error("edge {0} is not colored")]
    Uncolored(usize),

    #[error("vertex {vertex} is isolated in class {class}")]
    IsolatedInClass { vertex: usize, class: usize },

    /// A step that the construction proves always succeeds did not.
    #[error("internal contradiction: {0}")]
    Contradiction(String),

    #[error("search budget of {budget} nodes exhausted (linear arboricity >= {proven_lower})")]
    BudgetExceeded { budget: u64, proven_lower: usize },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Internal contradictions mean a bug in the construction rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Contradiction(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
