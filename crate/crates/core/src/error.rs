use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("cannot contract edge {edge}: {reason}")]
    Contract { edge: usize, reason: &'static str },

    /// Exhaustive search refused because the input is larger than the guard.
    #[error("size {actual} is above the exhaustive-search guard of {limit}")]
    SizeGuard { actual: usize, limit: usize },

    #[error("work budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("count overflows 128-bit arithmetic")]
    Overflow,

    #[error("underlying graphs differ: {0}")]
    UnderlyingMismatch(String),

    #[error("incomplete coloring: {assigned} colors for {vertex_count} vertices")]
    IncompleteColoring {
        assigned: usize,
        vertex_count: usize,
    },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("invalid parameters: {0}")]
    InvalidSpec(String),

    #[error("{0}")]
    OutOfScope(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::SizeGuard { .. } | Error::Overflow
        )
    }
}
