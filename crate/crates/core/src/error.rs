use thiserror::Error;

use crate::exactgeo::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptyInput,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("direction must be a nonzero integer vector")]
    ZeroDirection,

    #[error("hull is not full-dimensional (affine dimension {affine_dim} in ambient dimension {dim})")]
    Degenerate { affine_dim: usize, dim: usize },

    #[error("hull is not simplicial: facet with vertices {vertices:?} has more than {dim} vertices")]
    NotSimplicial { vertices: Vec<LatticePoint>, dim: usize },

    #[error("hull is not hollow: lattice point {witness} lies in its interior")]
    NotHollow { witness: LatticePoint },

    #[error("hull contains no lattice points")]
    NoLatticePoints,

    #[error(
        "swap removing {removed} and inserting {inserted} dropped the hull to affine dimension {affine_dim}"
    )]
    LostFullDimension {
        removed: LatticePoint,
        inserted: LatticePoint,
        affine_dim: usize,
    },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("theorem violation: hollow simplicial polytope with {vertices} vertices exceeds 2^{dim}")]
    TheoremViolation {
        dim: usize,
        vertices: usize,
        points: Vec<LatticePoint>,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
