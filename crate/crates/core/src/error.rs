use thiserror::Error;

/// Errors shared across the geometry primitives, the set model and the
/// solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violates the general-position assumption (collinear
    /// triple, angular tie, duplicate point). Never perturbed away.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A query point expected outside the hull is inside or on it.
    #[error("point lies inside or on the convex hull")]
    PointInsideHull,

    /// The operation's stated precondition (color counts, endpoint
    /// colors, hull membership, ...) does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// The requested endpoints form a special configuration, so no
    /// 1-plane Hamiltonian alternating path between them exists.
    #[error("special configuration: no 1-plane alternating path with these endpoints")]
    SpecialConfiguration,

    /// Instance exceeds the exhaustive-enumeration cap.
    #[error("instance too large for exhaustive enumeration: {size} > cap {cap}")]
    TooLarge { size: usize, cap: usize },

    /// A structural claim the construction relies on failed on a
    /// concrete input. Flagged instead of silently falling back.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    /// Malformed instance or route text.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Malformed generator pattern such as a bad run-length spec.
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
}

pub type Result<T> = std::result::Result<T, Error>;
