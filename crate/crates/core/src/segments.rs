//! Lattice segments: the longest one in a hull, the mod-k pigeonhole
//! witness, and translations dodging a dilated sublattice.
//!
//! A lattice segment `[x, y]` has length `gcd(y - x)`: the number of lattice
//! points on it minus one.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{gcd_all, Int};
use crate::error::{Error, Result};
use crate::exactgeo::{Containment, Direction, HullStructure, LatticePoint};
use crate::lattice::{enumerate_lattice_points, first_congruent_pair, scan_box};
use crate::serial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentWitness {
    pub x: LatticePoint,
    pub y: LatticePoint,
    /// Primitive step `(y - x) / length`; absent for a single point.
    pub step: Option<Direction>,
    #[serde(serialize_with = "serial::int")]
    pub length: Int,
}

impl SegmentWitness {
    fn between(x: LatticePoint, y: LatticePoint) -> Self {
        let diff = y.sub(&x);
        let length = gcd_all(diff.coords());
        let step = if length.is_zero() {
            None
        } else {
            let raw: Vec<Int> = diff.coords().iter().map(|c| c / &length).collect();
            // x < y lexicographically, so the raw step is already sign-canonical.
            Some(Direction::new(raw).expect("nonzero difference"))
        };
        Self { x, y, step, length }
    }

    /// `x, x + step, ..., y`.
    pub fn points(&self) -> Vec<LatticePoint> {
        let Some(step) = &self.step else {
            return vec![self.x.clone()];
        };
        let step = LatticePoint::new(step.as_slice().to_vec());
        let n = self.length.to_u64().expect("segment length fits in u64");
        let mut out = Vec::with_capacity(n as usize + 1);
        let mut cur = self.x.clone();
        for _ in 0..=n {
            out.push(cur.clone());
            cur = cur.add(&step);
        }
        out
    }

    pub fn lies_in(&self, hull: &HullStructure) -> bool {
        self.points()
            .iter()
            .all(|p| hull.contains_lattice(p, Containment::Closed))
    }
}

/// Longest lattice segment over all pairs of lattice points of the hull; ties
/// go to the lexicographically smallest `(x, y)`.
pub fn longest_lattice_segment(hull: &HullStructure) -> Result<SegmentWitness> {
    let pts = enumerate_lattice_points(hull);
    let first = pts.first().ok_or(Error::NoLatticePoints)?;
    let mut best = (Int::zero(), first, first);
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[i + 1..] {
            let g = gcd_all(y.sub(x).coords());
            if g > best.0 {
                best = (g, x, y);
            }
        }
    }
    Ok(SegmentWitness::between(best.1.clone(), best.2.clone()))
}

/// Two points congruent modulo `k`, extended to their full lattice segment
/// (length `gcd(y - x)`, a positive multiple of `k`).
pub fn modk_witness(points: &[LatticePoint], k: u64) -> Result<Option<SegmentWitness>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut distinct = points.to_vec();
    distinct.sort();
    distinct.dedup();
    Ok(first_congruent_pair(&distinct, &Int::from(k)).map(|(x, y)| SegmentWitness::between(x, y)))
}

/// First integer shift `t ∈ [0, m)^d` (lexicographically) with
/// `(P + t) ∩ mZ^d = ∅`. Shifts are only relevant modulo `m`, so the box is
/// exhaustive.
pub fn translate_avoiding_sublattice(
    hull: &HullStructure,
    m: u64,
) -> Result<Option<(LatticePoint, HullStructure)>> {
    if m < 2 {
        return Err(Error::InvalidParameter("modulus must be at least 2".into()));
    }
    let modulus = Int::from(m);
    let residues: HashSet<Vec<Int>> = enumerate_lattice_points(hull)
        .iter()
        .map(|p| p.coords().iter().map(|c| c.mod_floor(&modulus)).collect())
        .collect();
    let d = hull.dim();
    let lo = vec![Int::zero(); d];
    let hi = vec![Int::from(m - 1); d];
    let mut found = None;
    scan_box(&lo, &hi, |t| {
        // p + t ≡ 0 (mod m) iff p ≡ -t.
        let target: Vec<Int> = t.coords().iter().map(|c| (-c).mod_floor(&modulus)).collect();
        if residues.contains(&target) {
            true
        } else {
            found = Some(t.clone());
            false
        }
    });
    Ok(found.map(|t| {
        let moved = hull.translate(&t);
        (t, moved)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeo::convex_hull;

    fn pts(raw: &[&[i64]]) -> Vec<LatticePoint> {
        raw.iter().map(|c| LatticePoint::from_i64(c)).collect()
    }

    #[test]
    fn hypercube_segment_is_short() {
        let h = convex_hull(&pts(&[&[1, 1], &[4, 1], &[1, 4], &[4, 4]])).unwrap();
        let s = longest_lattice_segment(&h).unwrap();
        assert_eq!(s.length, Int::from(3));
        assert_eq!(s.x, LatticePoint::from_i64(&[1, 1]));
        assert_eq!(s.points().len(), 4);
        assert!(s.lies_in(&h));
    }

    #[test]
    fn single_point_has_length_zero() {
        let h = convex_hull(&pts(&[&[0, 0]])).unwrap();
        let s = longest_lattice_segment(&h).unwrap();
        assert_eq!(s.length, Int::zero());
        assert_eq!(s.step, None);
        assert_eq!(s.points(), pts(&[&[0, 0]]));
    }

    #[test]
    fn modk_examples() {
        assert_eq!(
            modk_witness(&pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]), 2).unwrap(),
            None
        );
        let w = modk_witness(&pts(&[&[0, 0], &[4, 0]]), 2).unwrap().unwrap();
        assert_eq!(w.length, Int::from(4));
        assert_eq!(w.step, Some(Direction::from_i64(&[1, 0]).unwrap()));
        assert!(modk_witness(&pts(&[&[0, 0]]), 0).is_err());
    }

    #[test]
    fn translation_examples() {
        let origin = convex_hull(&pts(&[&[0, 0, 0]])).unwrap();
        let (t, moved) = translate_avoiding_sublattice(&origin, 2).unwrap().unwrap();
        assert_eq!(t, LatticePoint::from_i64(&[0, 0, 1]));
        assert_eq!(moved.vertices(), pts(&[&[0, 0, 1]]).as_slice());

        let full = convex_hull(&pts(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3]])).unwrap();
        assert_eq!(translate_avoiding_sublattice(&full, 3).unwrap(), None);
        assert!(translate_avoiding_sublattice(&full, 1).is_err());
    }
}
