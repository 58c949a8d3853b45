use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid height function: {0}")]
    InvalidHeights(String),
    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),
    #[error("subdivisions live on different marked polygons")]
    BaseMismatch,
    #[error("cell is not a parallelogram")]
    NotParallelogram,
    #[error("cell {0} does not contain three non-collinear marked points")]
    UnderMarkedCell(usize),
    #[error("cone has no relative-interior point modulo constants")]
    EmptyCone,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("segment {0} is not an edge of the subdivision")]
    EdgeNotInSubdivision(String),
    #[error("subspaces are not complementary")]
    NotComplementary,
    #[error("subdivision is not nodal")]
    NotNodal,
    #[error("subdivision is not simple")]
    NotSimple,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("value does not fit the wire format: {0}")]
    Overflow(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidPolygon(_)
            | Error::InvalidHeights(_)
            | Error::InvalidSubdivision(_)
            | Error::DegenerateInput(_)
            | Error::Overflow(_) => 2,
            Error::BudgetExceeded(_) => 4,
            _ => 3,
        }
    }
}
