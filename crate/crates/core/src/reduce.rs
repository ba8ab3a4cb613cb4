//! Turning a hollow simplicial lattice polytope into an empty one with the
//! same number of vertices, one vertex swap at a time.
//!
//! Each step takes the lexicographically smallest non-vertex lattice point
//! `x` on the boundary, finds the minimal face containing it, and replaces
//! that face's lexicographically smallest vertex `y` by `x`. The new hull
//! sits inside the old one and loses `y`, so the number of non-vertex lattice
//! points drops by at least one per step.

use log::warn;
use serde::Serialize;

use crate::classify::{hull_is_empty, is_simplicial, require_simplicial};
use crate::error::{Error, Result};
use crate::exactgeo::{convex_hull, HullStructure, LatticePoint};
use crate::lattice::{enumerate_lattice_points, first_interior_lattice_point, locate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapRecord {
    pub inserted: LatticePoint,
    pub removed: LatticePoint,
    /// Vertices of the minimal face of the old hull containing `inserted`.
    pub face: Vec<LatticePoint>,
    pub face_dim: usize,
    pub nonvertex_points_before: usize,
    pub nonvertex_points_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<SwapRecord>,
    pub initial_vertex_count: usize,
    pub final_vertex_count: usize,
    pub final_vertices: Vec<LatticePoint>,
    /// Intermediate hulls that were not simplicial (`(step, facet vertices)`).
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub step: usize,
    pub message: String,
    pub facet: Vec<LatticePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum SwapOutcome {
    Swapped {
        hull: HullStructure,
        record: SwapRecord,
    },
    /// No non-vertex lattice points remain: the hull is empty.
    Done,
}

fn check_preconditions(p: &HullStructure) -> Result<()> {
    p.require_full_dimensional()?;
    require_simplicial(p)?;
    if let Some(witness) = first_interior_lattice_point(p) {
        return Err(Error::NotHollow { witness });
    }
    Ok(())
}

fn nonvertex_points(hull: &HullStructure) -> Vec<LatticePoint> {
    enumerate_lattice_points(hull)
        .into_iter()
        .filter(|q| !hull.is_vertex(q))
        .collect()
}

/// The swap itself, without re-checking simpliciality.
fn swap_unchecked(p: &HullStructure) -> Result<SwapOutcome> {
    let before = nonvertex_points(p);
    let Some(x) = before.first().cloned() else {
        return Ok(SwapOutcome::Done);
    };
    let loc = locate(p, &x);
    let face_idx = loc
        .minimal_face
        .expect("lattice point of the hull is located inside it");
    let face: Vec<LatticePoint> = face_idx.iter().map(|&i| p.vertices()[i].clone()).collect();
    let y = face.iter().min().expect("minimal face has vertices").clone();

    let mut gens: Vec<LatticePoint> = p.vertices().iter().filter(|v| **v != y).cloned().collect();
    gens.push(x.clone());
    let q = convex_hull(&gens)?;
    if !q.is_full_dimensional() {
        return Err(Error::LostFullDimension {
            removed: y,
            inserted: x,
            affine_dim: q.affine_dim(),
        });
    }
    if q.vertices().len() != p.vertices().len() {
        return Err(Error::InvariantViolation(format!(
            "swap removing {y} and inserting {x} changed the vertex count from {} to {}",
            p.vertices().len(),
            q.vertices().len()
        )));
    }
    let after = nonvertex_points(&q).len();
    if after >= before.len() {
        return Err(Error::InvariantViolation(format!(
            "swap did not decrease non-vertex lattice points ({} -> {after})",
            before.len()
        )));
    }
    Ok(SwapOutcome::Swapped {
        record: SwapRecord {
            inserted: x,
            removed: y,
            face_dim: loc.face_dim.unwrap_or(0),
            face,
            nonvertex_points_before: before.len(),
            nonvertex_points_after: after,
        },
        hull: q,
    })
}

/// One reduction step on a full-dimensional, simplicial, hollow hull.
pub fn swap_step(p: &HullStructure) -> Result<SwapOutcome> {
    check_preconditions(p)?;
    swap_unchecked(p)
}

/// Iterates [`swap_step`] to a fixpoint and checks the result is empty with
/// the original vertex count, at most `2^d`.
pub fn reduce_to_empty(p: &HullStructure) -> Result<(HullStructure, ReductionTrace)> {
    check_preconditions(p)?;
    let step_bound = enumerate_lattice_points(p).len();
    let mut current = p.clone();
    let mut steps = Vec::new();
    let mut findings = Vec::new();

    loop {
        if steps.len() > step_bound {
            return Err(Error::InvariantViolation(format!(
                "reduction exceeded its step bound of {step_bound}"
            )));
        }
        match swap_unchecked(&current)? {
            SwapOutcome::Done => break,
            SwapOutcome::Swapped { hull, record } => {
                if let Some(witness) = first_interior_lattice_point(&hull) {
                    return Err(Error::InvariantViolation(format!(
                        "swap produced a non-hollow hull with interior point {witness}"
                    )));
                }
                if let Some(facet) = is_simplicial(&hull)?.witness {
                    warn!("step {}: swapped hull is not simplicial", steps.len());
                    findings.push(Finding {
                        step: steps.len(),
                        message: "swapped hull is not simplicial".into(),
                        facet,
                    });
                }
                steps.push(record);
                current = hull;
            }
        }
    }

    if !hull_is_empty(&current).empty {
        return Err(Error::InvariantViolation(
            "reduction fixpoint is not empty".into(),
        ));
    }
    let d = current.dim();
    let n = current.vertices().len();
    if d < usize::BITS as usize && n > 1usize << d {
        return Err(Error::TheoremViolation {
            dim: d,
            vertices: n,
            points: current.vertices().to_vec(),
        });
    }
    let trace = ReductionTrace {
        steps,
        initial_vertex_count: p.vertices().len(),
        final_vertex_count: n,
        final_vertices: current.vertices().to_vec(),
        findings,
    };
    Ok((current, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<LatticePoint> {
        raw.iter().map(|c| LatticePoint::from_i64(c)).collect()
    }

    #[test]
    fn single_swap_on_triangle_with_edge_point() {
        let p = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap();
        let before = enumerate_lattice_points(&p).len();
        match swap_step(&p).unwrap() {
            SwapOutcome::Swapped { hull, record } => {
                assert_eq!(record.inserted, LatticePoint::from_i64(&[1, 0]));
                assert_eq!(record.removed, LatticePoint::from_i64(&[0, 0]));
                assert_eq!(record.face_dim, 1);
                assert_eq!(hull.vertices().len(), 3);
                assert_eq!(enumerate_lattice_points(&hull).len(), before - 1);
            }
            SwapOutcome::Done => panic!("boundary point was not swapped"),
        }
    }

    #[test]
    fn empty_input_is_a_fixpoint() {
        let p = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(swap_step(&p).unwrap(), SwapOutcome::Done);
        let (q, trace) = reduce_to_empty(&p).unwrap();
        assert_eq!(q, p);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn preconditions_are_enforced() {
        let big = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]])).unwrap();
        assert!(matches!(swap_step(&big), Err(Error::NotHollow { .. })));
        let cube: Vec<LatticePoint> = (0..8)
            .map(|m: i64| LatticePoint::from_i64(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]))
            .collect();
        let cube = convex_hull(&cube).unwrap();
        assert!(matches!(reduce_to_empty(&cube), Err(Error::NotSimplicial { .. })));
        let flat = convex_hull(&pts(&[&[0, 0], &[3, 0]])).unwrap();
        assert!(matches!(swap_step(&flat), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn triangle_reduces_to_empty_triangle() {
        let p = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap();
        let (q, trace) = reduce_to_empty(&p).unwrap();
        assert_eq!(q.vertices().len(), 3);
        assert!(hull_is_empty(&q).empty);
        assert_eq!(trace.final_vertex_count, trace.initial_vertex_count);
    }
}
