use thiserror::Error;

use crate::lp::{LpError, LpStatus};

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("empty point set")]
    Empty,
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("scale must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("operation requires dimension 2, got {0}")]
    RequiresPlanar(usize),
    #[error("polytope is lower-dimensional")]
    LowerDimensional,
    #[error("origin is not an interior point of the gauge body (margin {margin:e})")]
    OriginNotInterior { margin: f64 },
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("direction must have unit length, got norm {0}")]
    NonUnitDirection(f64),
    #[error("halfspace normal must be nonzero")]
    ZeroNormal,
    #[error("input is not centered")]
    NotCentered,
    #[error("invalid body specification: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("{context}: linear program ended with status {status:?}")]
    Solver {
        context: &'static str,
        status: LpStatus,
    },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
