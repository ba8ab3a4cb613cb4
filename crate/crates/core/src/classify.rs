//! The four defining predicates: empty, hollow, simplicial, general position.
//! Each failure carries a witness that can be re-checked independently.

use itertools::Itertools;
use serde::Serialize;

use crate::arith::rank;
use crate::error::{Error, Result};
use crate::exactgeo::{convex_hull, HullStructure, LatticePoint};
use crate::lattice::{enumerate_lattice_points, first_interior_lattice_point};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmptinessCheck {
    pub empty: bool,
    /// A lattice point of the hull that is not a vertex; interior points are
    /// preferred when there are any.
    pub witness: Option<LatticePoint>,
}

/// Whether the hull's lattice points are exactly its vertices.
pub fn hull_is_empty(hull: &HullStructure) -> EmptinessCheck {
    let lattice = enumerate_lattice_points(hull);
    let witness =
        first_interior_lattice_point(hull).or_else(|| lattice.into_iter().find(|p| !hull.is_vertex(p)));
    EmptinessCheck {
        empty: witness.is_none(),
        witness,
    }
}

/// `points` is empty in the lattice iff every point is a vertex of its hull
/// and the hull holds no other lattice point. A non-vertex input point is
/// itself a non-vertex lattice point of the hull, so one scan covers both.
pub fn is_empty_in_lattice(points: &[LatticePoint]) -> Result<EmptinessCheck> {
    Ok(hull_is_empty(&convex_hull(points)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Hollowness {
    Hollow,
    NotHollow {
        witness: LatticePoint,
    },
    /// The hull has no interior; hollowness is not asserted either way.
    Degenerate {
        affine_dim: usize,
    },
}

impl Hollowness {
    pub fn is_hollow(&self) -> bool {
        matches!(self, Hollowness::Hollow)
    }

    /// Topological convention: lower-dimensional hulls have empty interior.
    pub fn is_hollow_or_degenerate(&self) -> bool {
        !matches!(self, Hollowness::NotHollow { .. })
    }
}

pub fn hull_hollowness(hull: &HullStructure) -> Hollowness {
    if !hull.is_full_dimensional() {
        return Hollowness::Degenerate {
            affine_dim: hull.affine_dim(),
        };
    }
    match first_interior_lattice_point(hull) {
        Some(witness) => Hollowness::NotHollow { witness },
        None => Hollowness::Hollow,
    }
}

pub fn is_hollow(points: &[LatticePoint]) -> Result<Hollowness> {
    Ok(hull_hollowness(&convex_hull(points)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialCheck {
    pub simplicial: bool,
    /// Vertices of a facet with more than `d` vertices.
    pub witness: Option<Vec<LatticePoint>>,
}

pub fn is_simplicial(hull: &HullStructure) -> Result<SimplicialCheck> {
    hull.require_full_dimensional()?;
    let witness = hull
        .facets()
        .iter()
        .find(|f| f.vertices.len() > hull.dim())
        .map(|f| hull.facet_vertices(f));
    Ok(SimplicialCheck {
        simplicial: witness.is_none(),
        witness,
    })
}

/// Errors with the offending facet unless the hull is simplicial.
pub fn require_simplicial(hull: &HullStructure) -> Result<()> {
    match is_simplicial(hull)?.witness {
        None => Ok(()),
        Some(vertices) => Err(Error::NotSimplicial {
            vertices,
            dim: hull.dim(),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralPositionCheck {
    pub general_position: bool,
    /// The first `(d+1)`-subset, in lexicographic order, lying on a hyperplane.
    pub witness: Option<Vec<LatticePoint>>,
}

/// No `d+1` of the points on a common hyperplane. Vacuously true for fewer
/// than `d+1` points.
pub fn is_general_position(points: &[LatticePoint]) -> GeneralPositionCheck {
    let Some(d) = points.first().map(LatticePoint::dim) else {
        return GeneralPositionCheck {
            general_position: true,
            witness: None,
        };
    };
    let mut sorted = points.to_vec();
    sorted.sort();
    let witness = sorted
        .iter()
        .combinations(d + 1)
        .find(|subset| {
            let diffs: Vec<_> = subset[1..]
                .iter()
                .map(|p| p.sub(subset[0]).into_coords())
                .collect();
            rank(&diffs) < d
        })
        .map(|subset| subset.into_iter().cloned().collect());
    GeneralPositionCheck {
        general_position: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    pub affine_dim: usize,
    pub degenerate: bool,
    pub vertices: usize,
    pub lattice_points: usize,
    pub empty: bool,
    /// `None` when degenerate.
    pub hollow: Option<bool>,
    /// `None` when degenerate.
    pub simplicial: Option<bool>,
    /// Of the vertex set.
    pub general_position: bool,
    pub witnesses: ClassificationWitnesses,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_vertex_lattice_point: Option<LatticePoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interior_lattice_point: Option<LatticePoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oversized_facet: Option<Vec<LatticePoint>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coplanar_subset: Option<Vec<LatticePoint>>,
}

pub fn classify_hull(hull: &HullStructure) -> ClassificationReport {
    let emptiness = hull_is_empty(hull);
    let hollowness = hull_hollowness(hull);
    let simplicial = is_simplicial(hull).ok();
    let gp = is_general_position(hull.vertices());

    let mut witnesses = ClassificationWitnesses {
        non_vertex_lattice_point: emptiness.witness.clone(),
        coplanar_subset: gp.witness.clone(),
        ..Default::default()
    };
    if let Hollowness::NotHollow { witness } = &hollowness {
        witnesses.interior_lattice_point = Some(witness.clone());
    }
    if let Some(s) = &simplicial {
        witnesses.oversized_facet = s.witness.clone();
    }

    ClassificationReport {
        dim: hull.dim(),
        affine_dim: hull.affine_dim(),
        degenerate: !hull.is_full_dimensional(),
        vertices: hull.vertices().len(),
        lattice_points: enumerate_lattice_points(hull).len(),
        empty: emptiness.empty,
        hollow: match hollowness {
            Hollowness::Degenerate { .. } => None,
            h => Some(h.is_hollow()),
        },
        simplicial: simplicial.map(|s| s.simplicial),
        general_position: gp.general_position,
        witnesses,
    }
}

pub fn classify(points: &[LatticePoint]) -> Result<ClassificationReport> {
    Ok(classify_hull(&convex_hull(points)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<LatticePoint> {
        raw.iter().map(|c| LatticePoint::from_i64(c)).collect()
    }

    #[test]
    fn square_of_side_two_is_neither_empty_nor_hollow() {
        let sq = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        let e = is_empty_in_lattice(&sq).unwrap();
        assert!(!e.empty);
        assert_eq!(e.witness, Some(LatticePoint::from_i64(&[1, 1])));
        assert_eq!(
            is_hollow(&sq).unwrap(),
            Hollowness::NotHollow {
                witness: LatticePoint::from_i64(&[1, 1])
            }
        );
    }

    #[test]
    fn thin_rectangle_is_hollow() {
        let r = pts(&[&[0, 0], &[1, 0], &[0, 7], &[1, 7]]);
        assert!(is_hollow(&r).unwrap().is_hollow());
        assert!(!is_empty_in_lattice(&r).unwrap().empty);
    }

    #[test]
    fn degenerate_hollowness_is_not_asserted() {
        let seg = pts(&[&[0, 0], &[3, 0]]);
        assert_eq!(is_hollow(&seg).unwrap(), Hollowness::Degenerate { affine_dim: 1 });
        let report = classify(&seg).unwrap();
        assert!(report.degenerate);
        assert_eq!(report.hollow, None);
        assert_eq!(report.simplicial, None);
    }

    #[test]
    fn simplicial_examples() {
        let cross = convex_hull(&pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]))
        .unwrap();
        assert!(is_simplicial(&cross).unwrap().simplicial);

        let cube: Vec<LatticePoint> = (0..8)
            .map(|m: i64| LatticePoint::from_i64(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]))
            .collect();
        let check = is_simplicial(&convex_hull(&cube).unwrap()).unwrap();
        assert!(!check.simplicial);
        assert_eq!(check.witness.unwrap().len(), 4);

        let flat = convex_hull(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert!(matches!(is_simplicial(&flat), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn general_position_examples() {
        assert!(is_general_position(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).general_position);
        let c = is_general_position(&pts(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]));
        assert!(!c.general_position);
        assert_eq!(c.witness.unwrap(), pts(&[&[0, 0], &[1, 0], &[2, 0]]));
        assert!(is_general_position(&pts(&[&[0, 0], &[1, 0]])).general_position);
    }
}
