//! Error type covering every fallible operation of the kernel.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("point is not on the quadric: |q(x)+1| = {residual:e}")]
    NotOnQuadric { residual: f64 },
    #[error("vector is not tangent at the base point: |<x,v>| = {residual:e}")]
    NotTangent { residual: f64 },
    #[error("tangent plane is degenerate: |Gram determinant| = {gram:e}")]
    DegeneratePlane { gram: f64 },
    #[error("geodesic endpoints coincide")]
    DegenerateGeodesic,
    #[error("geodesic is not spacelike")]
    NotSpacelike,
    #[error("matrix is not of rank one")]
    NotRankOne,
    #[error("boundary point lies outside the angle chart")]
    OutOfChart,
    #[error("circle map samples are not strictly monotone")]
    NotMonotone,
    #[error("displacement function is tangent to zero; fixed-point test inconclusive")]
    Inconclusive,
    #[error("meridian spans a plane; convex hull is two-dimensional")]
    DegenerateHull,
    #[error("vector is not timelike")]
    NotTimelike,
    #[error("vector is not future-directed")]
    NotFuture,
    #[error("surface is not spacelike at the probe point")]
    NotSpacelikeSurface,
    #[error("probe point is outside or too close to the patch boundary")]
    DomainBoundary,
    #[error("curvature must be positive, got {0}")]
    NonPositiveK(f64),
    #[error("coordinate out of range: {0}")]
    OutOfRange(String),
    #[error("lattice vectors are linearly dependent")]
    DegenerateLattice,
    #[error("surface-group relator residual {0:e} exceeds tolerance")]
    RelatorViolation(f64),
    #[error("group word {0:?} is not hyperbolic")]
    NonHyperbolicWord(String),
    #[error("limit-curve samples are not monotone; input pair is not Fuchsian")]
    NonMonotoneSamples,
    #[error("bending weight must be positive, got {0}")]
    NonPositiveWeight(f64),
    #[error("point lies on the bending line")]
    OnBendingLine,
    #[error("point lies on a lamination leaf")]
    OnLeaf,
    #[error("finite-difference Jacobian is singular at a sample")]
    SingularJacobian,
    #[error("unknown figure name: {0}")]
    UnknownFigure(String),
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
