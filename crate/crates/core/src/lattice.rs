//! Lattice points of hulls, their location in the face lattice, and the
//! parity pigeonhole witness.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{ceil_rat, floor_rat, Int, Rat};
use crate::exactgeo::{
    affine_dimension, Containment, HullStructure, LatticePoint, RationalPoint, ScaledBody,
};

/// Calls `visit` on every integer point of the box `[lo, hi]` in
/// lexicographic order. Stops early when `visit` returns false.
pub(crate) fn scan_box(lo: &[Int], hi: &[Int], mut visit: impl FnMut(&LatticePoint) -> bool) {
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return;
    }
    let d = lo.len();
    let mut cur = lo.to_vec();
    loop {
        if !visit(&LatticePoint::new(cur.clone())) {
            return;
        }
        let mut i = d;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i].clone();
        }
    }
}

/// All lattice points of the hull, sorted lexicographically.
pub fn enumerate_lattice_points(hull: &HullStructure) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    filtered_scan(hull, Containment::Closed, |p| {
        out.push(p.clone());
        true
    });
    out
}

/// Lattice points of the topological interior, sorted lexicographically.
pub fn interior_lattice_points(hull: &HullStructure) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    filtered_scan(hull, Containment::Open, |p| {
        out.push(p.clone());
        true
    });
    out
}

/// Lexicographically first interior lattice point, if any.
pub fn first_interior_lattice_point(hull: &HullStructure) -> Option<LatticePoint> {
    let mut found = None;
    filtered_scan(hull, Containment::Open, |p| {
        found = Some(p.clone());
        false
    });
    found
}

fn filtered_scan(hull: &HullStructure, mode: Containment, mut visit: impl FnMut(&LatticePoint) -> bool) {
    if mode == Containment::Open && !hull.is_full_dimensional() {
        return;
    }
    let (lo, hi) = hull.bounding_box();
    scan_box(&lo, &hi, |p| {
        if hull.contains_lattice(p, mode) {
            visit(p)
        } else {
            true
        }
    });
}

/// Lattice points of a scaled body (closed), sorted lexicographically.
pub fn scaled_body_lattice_points(body: &ScaledBody) -> Vec<LatticePoint> {
    let verts = body.vertices();
    let d = body.dim();
    let mut lo = Vec::with_capacity(d);
    let mut hi = Vec::with_capacity(d);
    for i in 0..d {
        let col = verts.iter().map(|v| v.coords()[i].clone());
        let min: Rat = col.clone().min().expect("body has vertices");
        let max: Rat = col.max().expect("body has vertices");
        lo.push(ceil_rat(&min));
        hi.push(floor_rat(&max));
    }
    let mut out = Vec::new();
    scan_box(&lo, &hi, |p| {
        if body.contains(&RationalPoint::from(p), Containment::Closed) {
            out.push(p.clone());
        }
        true
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocationStatus {
    Vertex,
    BoundaryNonvertex,
    Interior,
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointLocation {
    pub status: LocationStatus,
    /// Indices into the hull's vertex list; absent when outside.
    pub minimal_face: Option<Vec<usize>>,
    pub face_dim: Option<usize>,
}

/// Locates `p` relative to the hull. The minimal face is the intersection of
/// the facets tight at `p` (the whole hull when none are).
pub fn locate(hull: &HullStructure, p: &LatticePoint) -> PointLocation {
    if p.dim() != hull.dim() || !hull.contains_lattice(p, Containment::Closed) {
        return PointLocation {
            status: LocationStatus::Outside,
            minimal_face: None,
            face_dim: None,
        };
    }
    let tight = hull.tight_facets(p);
    let face: Vec<usize> = (0..hull.vertices().len())
        .filter(|v| tight.iter().all(|&f| hull.facets()[f].vertices.contains(v)))
        .collect();
    let face_points: Vec<LatticePoint> = face.iter().map(|&i| hull.vertices()[i].clone()).collect();
    let face_dim = affine_dimension(&face_points);
    let status = if face_dim == 0 {
        LocationStatus::Vertex
    } else if tight.is_empty() && hull.is_full_dimensional() {
        LocationStatus::Interior
    } else {
        LocationStatus::BoundaryNonvertex
    };
    PointLocation {
        status,
        minimal_face: Some(face),
        face_dim: Some(face_dim),
    }
}

/// Two points congruent modulo `k` in every coordinate: the first pair met
/// when scanning the points in lexicographic order.
pub(crate) fn first_congruent_pair(points: &[LatticePoint], k: &Int) -> Option<(LatticePoint, LatticePoint)> {
    let mut sorted = points.to_vec();
    sorted.sort();
    let mut seen: HashMap<Vec<Int>, usize> = HashMap::new();
    for (j, p) in sorted.iter().enumerate() {
        let residue: Vec<Int> = p.coords().iter().map(|c| c.mod_floor(k)).collect();
        if let Some(&i) = seen.get(&residue) {
            return Some((sorted[i].clone(), p.clone()));
        }
        seen.insert(residue, j);
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityWitness {
    pub x: LatticePoint,
    pub y: LatticePoint,
    pub midpoint: LatticePoint,
}

/// Two points of equal coordinatewise parity and their (integral) midpoint.
/// Guaranteed to exist once there are more than `2^d` distinct points.
pub fn parity_witness(points: &[LatticePoint]) -> Option<ParityWitness> {
    let two = Int::from(2);
    let (x, y) = first_congruent_pair(points, &two)?;
    let midpoint = LatticePoint::new(
        x.coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| (a + b) / &two)
            .collect(),
    );
    debug_assert_eq!(x.add(&y), midpoint.scale(&two));
    Some(ParityWitness { x, y, midpoint })
}
