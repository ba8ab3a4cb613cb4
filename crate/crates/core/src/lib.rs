//! Exact geometry of hollow and empty lattice polytopes.
//!
//! Everything is computed over arbitrary-precision integers and rationals:
//! convex hulls with facet normals, lattice-point enumeration, emptiness and
//! hollowness tests, lattice width, the vertex-swap reduction from hollow
//! simplicial polytopes to empty ones, lattice segments, the standard
//! constructions, and small search experiments.

pub mod arith;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod exactgeo;
pub mod lattice;
pub mod lp;
pub mod reduce;
pub mod search;
pub mod segments;
pub mod serial;
pub mod width;

pub use arith::{Int, Rat};
pub use classify::{classify, ClassificationReport, Hollowness};
pub use error::{Error, Result};
pub use exactgeo::{
    convex_hull, Containment, Direction, HullStructure, LatticePoint, RationalPoint, ScaledBody,
};
pub use reduce::{reduce_to_empty, swap_step, ReductionTrace, SwapOutcome};
pub use width::{lattice_width, WidthResult};
