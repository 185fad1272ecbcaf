use crate::region::Point;

/// Errors produced by the ladder computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid corners: {0}")]
    InvalidCorners(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid minor: {0}")]
    InvalidMinor(String),

    #[error("point {point} lies outside the rectangle spanned by {from} and {to}")]
    OutOfBounds { point: Point, from: Point, to: Point },

    #[error("assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("no lattice path satisfies the gates between {from} and {to}")]
    Infeasible { from: Point, to: Point },

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
