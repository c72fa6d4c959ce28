use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite coordinate at vertex {0}")]
    NonFinite(usize),

    #[error("need at least 3 distinct vertices, got {0}")]
    TooFewVertices(usize),

    #[error("all points are collinear")]
    AllCollinear,

    #[error("vertex ring is not convex (reflex turn at vertex {0})")]
    NotConvex(usize),

    #[error("polygon has zero area")]
    ZeroArea,

    #[error("degenerate triangle (area {0:e})")]
    DegenerateTriangle(f64),

    #[error("invalid {field}: {reason}")]
    Domain { field: &'static str, reason: String },

    #[error("no grid point available at spacing {0:e}")]
    EmptyGrid(f64),

    #[error("no convergence after {evaluations} objective evaluations (simplex size {size:e})")]
    NonConvergence { evaluations: usize, size: f64 },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("malformed polygon JSON: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            field,
            reason: reason.into(),
        }
    }
}
