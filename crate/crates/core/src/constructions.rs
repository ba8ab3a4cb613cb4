//! Generators for the explicit point sets: simplices, the 0/1 cube, the
//! cross-polytope inside the cube, lifted polygons, lattice hypercubes and
//! lattice balls. Each named construction carries the claims it certifies.

use std::fmt;
use std::str::FromStr;

use log::warn;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::Int;
use crate::classify::{hull_hollowness, hull_is_empty, is_simplicial};
use crate::error::{Error, Result};
use crate::exactgeo::{convex_hull, HullStructure, LatticePoint};
use crate::lattice::{enumerate_lattice_points, interior_lattice_points, locate};
use crate::segments::longest_lattice_segment;
use crate::width::lattice_width;

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// `{0, e_1, ..., e_d}`.
pub fn unit_simplex(d: usize) -> Result<Vec<LatticePoint>> {
    dilated_by(d, 1)
}

/// `{0, d e_1, ..., d e_d}`.
pub fn dilated_simplex(d: usize) -> Result<Vec<LatticePoint>> {
    dilated_by(d, d as i64)
}

fn dilated_by(d: usize, s: i64) -> Result<Vec<LatticePoint>> {
    require(d >= 1, "dimension must be at least 1")?;
    let mut out = vec![LatticePoint::origin(d)];
    out.extend((0..d).map(|i| LatticePoint::unit(d, i).scale(&Int::from(s))));
    Ok(out)
}

/// All `2^d` vectors in `{0,1}^d`, lexicographic.
pub fn doignon_cube(d: usize) -> Result<Vec<LatticePoint>> {
    require((1..=20).contains(&d), "dimension must be in 1..=20")?;
    Ok((0..1u64 << d)
        .map(|m| {
            LatticePoint::from_i64(
                &(0..d)
                    .map(|i| ((m >> (d - 1 - i)) & 1) as i64)
                    .collect::<Vec<_>>(),
            )
        })
        .collect())
}

/// `{e_i} ∪ {1 - e_i}`. At `d = 2` the two halves coincide and only two
/// distinct points remain.
pub fn cross_in_cube(d: usize) -> Result<Vec<LatticePoint>> {
    require(d >= 2, "cross_in_cube needs dimension at least 2")?;
    if d == 2 {
        warn!("cross_in_cube(2) collapses to two points");
    }
    let ones = LatticePoint::from_i64(&vec![1; d]);
    let mut out: Vec<LatticePoint> = (0..d)
        .flat_map(|i| {
            let e = LatticePoint::unit(d, i);
            let co = ones.sub(&e);
            [e, co]
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Default convex lattice `n`-gon: `(t, t²)` for `t = 0..n`.
pub fn moment_polygon(n: usize) -> Vec<[i64; 2]> {
    (0..n as i64).map(|t| [t, t * t]).collect()
}

/// The polygon embedded in the first two coordinates, together with
/// `e_3, ..., e_d`.
pub fn polygon_lift_with(polygon: &[[i64; 2]], d: usize) -> Result<Vec<LatticePoint>> {
    require(d >= 3, "polygon_lift needs dimension at least 3")?;
    require(polygon.len() >= 3, "polygon needs at least 3 vertices")?;
    let mut out: Vec<LatticePoint> = polygon
        .iter()
        .map(|[x, y]| {
            let mut c = vec![0i64; d];
            c[0] = *x;
            c[1] = *y;
            LatticePoint::from_i64(&c)
        })
        .collect();
    out.extend((2..d).map(|i| LatticePoint::unit(d, i)));
    Ok(out)
}

pub fn polygon_lift(n: usize, d: usize) -> Result<Vec<LatticePoint>> {
    require(n >= 3, "polygon needs at least 3 vertices")?;
    polygon_lift_with(&moment_polygon(n), d)
}

/// The `k^d` points of `[1, k]^d`.
pub fn hypercube_k(k: u64, d: usize) -> Result<Vec<LatticePoint>> {
    require(k >= 1 && d >= 1, "k and d must be at least 1")?;
    let mut out = Vec::new();
    let lo = vec![Int::from(1); d];
    let hi = vec![Int::from(k); d];
    crate::lattice::scan_box(&lo, &hi, |p| {
        out.push(p.clone());
        true
    });
    Ok(out)
}

/// Integer points `p` with `4‖p‖² <= (k-1)²`, i.e. the lattice points of the
/// ball of radius `(k-1)/2` about the origin.
pub fn ball_polytope(k: u64, d: usize) -> Result<Vec<LatticePoint>> {
    require(k >= 1 && d >= 1, "k and d must be at least 1")?;
    let bound = Int::from(k - 1) * Int::from(k - 1);
    let r = ((k - 1) / 2) as i64;
    let lo = vec![Int::from(-r); d];
    let hi = vec![Int::from(r); d];
    let mut out = Vec::new();
    crate::lattice::scan_box(&lo, &hi, |p| {
        let sq: Int = p.coords().iter().map(|c| c * c).sum();
        if Int::from(4) * sq <= bound {
            out.push(p.clone());
        }
        true
    });
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    UnitSimplex,
    DilatedSimplex,
    DoignonCube,
    CrossInCube,
    PolygonLift,
    HypercubeK,
    BallPolytope,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 7] = [
        Self::UnitSimplex,
        Self::DilatedSimplex,
        Self::DoignonCube,
        Self::CrossInCube,
        Self::PolygonLift,
        Self::HypercubeK,
        Self::BallPolytope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::UnitSimplex => "unit_simplex",
            Self::DilatedSimplex => "dilated_simplex",
            Self::DoignonCube => "doignon_cube",
            Self::CrossInCube => "cross_in_cube",
            Self::PolygonLift => "polygon_lift",
            Self::HypercubeK => "hypercube_k",
            Self::BallPolytope => "ball_polytope",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown construction '{s}'")))
    }
}

/// A property a construction is expected to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", content = "value", rename_all = "snake_case")]
pub enum Claim {
    Empty,
    Hollow,
    Simplicial,
    VertexCount(usize),
    LatticePointCount(usize),
    LatticeWidth(u64),
    InteriorLatticeFree,
    /// Every lattice point lies on a face of at most this dimension.
    MaxLatticeFaceDim(usize),
    LongestSegment(u64),
    /// No lattice segment of this length.
    NoSegmentOfLength(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedConstruction {
    pub kind: ConstructionKind,
    pub d: usize,
    pub k: Option<u64>,
    pub n: Option<usize>,
    pub points: Vec<LatticePoint>,
    pub claims: Vec<Claim>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub d: usize,
    pub k: Option<u64>,
    pub n: Option<usize>,
}

pub fn construct(kind: ConstructionKind, params: &Params) -> Result<NamedConstruction> {
    let d = params.d;
    let need_k = || {
        params
            .k
            .ok_or_else(|| Error::InvalidParameter(format!("{kind} needs parameter k")))
    };
    let mut notes = Vec::new();
    let (k, n, points, claims) = match kind {
        ConstructionKind::UnitSimplex => (
            None,
            None,
            unit_simplex(d)?,
            vec![Claim::Empty, Claim::Hollow, Claim::VertexCount(d + 1)],
        ),
        ConstructionKind::DilatedSimplex => (
            None,
            None,
            dilated_simplex(d)?,
            vec![
                Claim::VertexCount(d + 1),
                Claim::LatticeWidth(d as u64),
                Claim::InteriorLatticeFree,
            ],
        ),
        ConstructionKind::DoignonCube => (
            None,
            None,
            doignon_cube(d)?,
            vec![Claim::Empty, Claim::VertexCount(1 << d)],
        ),
        ConstructionKind::CrossInCube => {
            let pts = cross_in_cube(d)?;
            let claims = if d >= 3 {
                vec![Claim::Hollow, Claim::Simplicial, Claim::VertexCount(2 * d)]
            } else {
                notes.push("at d = 2 the set collapses to two points".into());
                vec![Claim::VertexCount(2)]
            };
            (None, None, pts, claims)
        }
        ConstructionKind::PolygonLift => {
            let n = params
                .n
                .ok_or_else(|| Error::InvalidParameter("polygon_lift needs parameter n".into()))?;
            (
                None,
                Some(n),
                polygon_lift(n, d)?,
                vec![Claim::VertexCount(n + d - 2), Claim::MaxLatticeFaceDim(2)],
            )
        }
        ConstructionKind::HypercubeK => {
            let k = need_k()?;
            let count = k
                .checked_pow(d as u32)
                .and_then(|c| c.to_usize())
                .ok_or_else(|| Error::InvalidParameter("k^d too large".into()))?;
            (
                Some(k),
                None,
                hypercube_k(k, d)?,
                vec![Claim::LatticePointCount(count), Claim::LongestSegment(k - 1)],
            )
        }
        ConstructionKind::BallPolytope => {
            let k = need_k()?;
            (
                Some(k),
                None,
                ball_polytope(k, d)?,
                vec![Claim::NoSegmentOfLength(k)],
            )
        }
    };
    Ok(NamedConstruction {
        kind,
        d,
        k,
        n,
        points,
        claims,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: Claim,
    pub holds: bool,
    pub observed: String,
}

/// Re-derives every claim of a construction from its hull.
pub fn verify_claims(c: &NamedConstruction) -> Result<Vec<ClaimCheck>> {
    let hull = convex_hull(&c.points)?;
    c.claims.iter().map(|claim| check_claim(&hull, claim)).collect()
}

pub fn check_claim(hull: &HullStructure, claim: &Claim) -> Result<ClaimCheck> {
    let (holds, observed) = match claim {
        Claim::Empty => {
            let e = hull_is_empty(hull);
            (e.empty, format!("{:?}", e.witness))
        }
        Claim::Hollow => {
            let h = hull_hollowness(hull);
            (h.is_hollow(), format!("{h:?}"))
        }
        Claim::Simplicial => {
            let s = is_simplicial(hull)?;
            (s.simplicial, format!("{:?}", s.witness))
        }
        Claim::VertexCount(n) => {
            let v = hull.vertices().len();
            (v == *n, v.to_string())
        }
        Claim::LatticePointCount(n) => {
            let v = enumerate_lattice_points(hull).len();
            (v == *n, v.to_string())
        }
        Claim::LatticeWidth(w) => {
            let lw = lattice_width(hull)?.value;
            (
                lw == crate::arith::Rat::from_integer(Int::from(*w)),
                lw.to_string(),
            )
        }
        Claim::InteriorLatticeFree => {
            let inner = interior_lattice_points(hull);
            (
                hull.is_full_dimensional() && inner.is_empty(),
                inner.len().to_string(),
            )
        }
        Claim::MaxLatticeFaceDim(m) => {
            let worst = enumerate_lattice_points(hull)
                .iter()
                .filter_map(|p| locate(hull, p).face_dim)
                .max()
                .unwrap_or(0);
            (worst <= *m, worst.to_string())
        }
        Claim::LongestSegment(len) => {
            let s = longest_lattice_segment(hull)?;
            (s.length == Int::from(*len), s.length.to_string())
        }
        Claim::NoSegmentOfLength(len) => {
            let s = longest_lattice_segment(hull)?;
            (s.length < Int::from(*len), s.length.to_string())
        }
    };
    Ok(ClaimCheck {
        claim: claim.clone(),
        holds,
        observed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplices() {
        assert_eq!(unit_simplex(2).unwrap().len(), 3);
        assert_eq!(dilated_simplex(3).unwrap()[3], LatticePoint::from_i64(&[0, 0, 3]));
        assert!(unit_simplex(0).is_err());
    }

    #[test]
    fn cube_and_cross() {
        let c = doignon_cube(3).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(cross_in_cube(3).unwrap().len(), 6);
        assert_eq!(
            cross_in_cube(2).unwrap(),
            vec![LatticePoint::from_i64(&[0, 1]), LatticePoint::from_i64(&[1, 0])]
        );
        assert!(cross_in_cube(1).is_err());
    }

    #[test]
    fn polygon_lift_shape() {
        let p = polygon_lift(5, 3).unwrap();
        assert_eq!(p.len(), 6);
        assert!(polygon_lift(2, 3).is_err());
        assert!(polygon_lift(5, 2).is_err());
    }

    #[test]
    fn grid_and_ball_counts() {
        assert_eq!(hypercube_k(3, 2).unwrap().len(), 9);
        // Disk of radius 2: 1 + 4 + 4 + 4 = 13.
        assert_eq!(ball_polytope(5, 2).unwrap().len(), 13);
        assert_eq!(ball_polytope(1, 3).unwrap(), vec![LatticePoint::origin(3)]);
    }

    #[test]
    fn kinds_round_trip_by_name() {
        for k in ConstructionKind::ALL {
            assert_eq!(k.name().parse::<ConstructionKind>().unwrap(), k);
        }
        assert!("nope".parse::<ConstructionKind>().is_err());
    }

    #[test]
    fn small_constructions_verify() {
        let cases = [
            (
                ConstructionKind::UnitSimplex,
                Params {
                    d: 2,
                    ..Default::default()
                },
            ),
            (
                ConstructionKind::DilatedSimplex,
                Params {
                    d: 3,
                    ..Default::default()
                },
            ),
            (
                ConstructionKind::DoignonCube,
                Params {
                    d: 3,
                    ..Default::default()
                },
            ),
            (
                ConstructionKind::CrossInCube,
                Params {
                    d: 3,
                    ..Default::default()
                },
            ),
            (
                ConstructionKind::PolygonLift,
                Params {
                    d: 3,
                    n: Some(5),
                    k: None,
                },
            ),
            (
                ConstructionKind::HypercubeK,
                Params {
                    d: 2,
                    k: Some(3),
                    n: None,
                },
            ),
            (
                ConstructionKind::BallPolytope,
                Params {
                    d: 2,
                    k: Some(5),
                    n: None,
                },
            ),
        ];
        for (kind, params) in cases {
            let c = construct(kind, &params).unwrap();
            for check in verify_claims(&c).unwrap() {
                assert!(
                    check.holds,
                    "{kind}: {:?} observed {}",
                    check.claim, check.observed
                );
            }
        }
    }
}
