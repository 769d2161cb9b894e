use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{family} dimension {n} outside supported range {min}..={max}")]
    DimensionOutOfRange {
        family: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    #[error("perfect matching complement needs an even vertex count, got {0}")]
    OddMatching(usize),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget of {budget} nodes exhausted ({context})")]
    BudgetExceeded { budget: u64, context: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
