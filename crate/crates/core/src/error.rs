use crate::exactq::QVector;

/// Input faults and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("halfspace normal must be nonzero")]
    ZeroNormal,
    #[error("generator list has rays or lines but no vertex")]
    MissingVertex,
    #[error("operation requires a nonempty polyhedron")]
    EmptyPolyhedron,
    #[error("linear functional is unbounded below on the polyhedron")]
    UnboundedFunctional,
    #[error("direction {0} is not in the recession cone")]
    NotInRecessionCone(QVector),
    #[error("point {0} does not lie in the polyhedral set")]
    PointOutsideSet(QVector),
    #[error("complexes cannot contain the empty polyhedron")]
    EmptyCell,
    #[error("input is not a polyhedral complex")]
    InvalidComplex,
    #[error("complex is not conic")]
    NotConic,
    #[error("cell leaves the halfspace t >= 0")]
    OutsideUpperHalfSpace,
    #[error("complex is not complete")]
    NotComplete,
    #[error("complex is not strongly convex")]
    NotStronglyConvex,
}

pub type Result<T, E = GeometryError> = core::result::Result<T, E>;
