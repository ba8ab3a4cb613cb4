//! Exact geometric kernel: lattice and rational points, primitive directions,
//! and convex hulls with integer facet descriptions.
//!
//! Hulls are computed by beneath-beyond insertion over a triangulated
//! boundary, in the affine hull of the input when the input is degenerate.
//! Coplanar boundary simplices are merged afterwards, so every facet carries a
//! primitive outward normal and an integer offset (`normal · x <= offset`).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{self, dot, dot_rat, gcd_all, Echelon, Int, Rat};
use crate::error::{Error, Result};
use crate::serial;

/// A point of the integer lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LatticePoint(#[serde(serialize_with = "serial::int_vec")] Vec<Int>);

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        Self(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn origin(d: usize) -> Self {
        Self(vec![Int::zero(); d])
    }

    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = vec![Int::zero(); d];
        v[i] = Int::one();
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.0
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Int) -> LatticePoint {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, v: &[Int]) -> Int {
        dot(&self.0, v)
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(self.0.iter().cloned().map(Rat::from_integer).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point with exact rational coordinates (always in lowest terms).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RationalPoint(#[serde(serialize_with = "serial::rat_vec")] Vec<Rat>);

impl RationalPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// Returns the common denominator `q` and the integer vector `q * self`.
    pub fn scaled_to_integer(&self) -> (Int, Vec<Int>) {
        let q = self
            .0
            .iter()
            .fold(Int::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
        let v = self.0.iter().map(|x| x.numer() * (&q / x.denom())).collect();
        (q, v)
    }
}

impl From<&LatticePoint> for RationalPoint {
    fn from(p: &LatticePoint) -> Self {
        p.to_rational()
    }
}

/// A primitive nonzero integer vector whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Direction(#[serde(serialize_with = "serial::int_vec")] Vec<Int>);

impl Direction {
    /// Normalizes `v` to its primitive, sign-canonical representative.
    pub fn new(v: Vec<Int>) -> Result<Self> {
        let g = gcd_all(&v);
        if g.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let mut v: Vec<Int> = v.into_iter().map(|x| x / &g).collect();
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        Ok(Self(v))
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn axis(d: usize, i: usize) -> Self {
        Self(LatticePoint::unit(d, i).0)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Int] {
        &self.0
    }

    pub fn l1_norm(&self) -> Int {
        arith::l1_norm(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    /// Topological closure: all facet inequalities hold non-strictly.
    Closed,
    /// Topological interior in the ambient space; empty for degenerate hulls.
    Open,
}

/// A facet inequality `normal · x <= offset` and the hull vertices on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    #[serde(serialize_with = "serial::int_vec")]
    pub normal: Vec<Int>,
    #[serde(serialize_with = "serial::int")]
    pub offset: Int,
    /// Indices into [`HullStructure::vertices`].
    pub vertices: Vec<usize>,
}

/// An equation `normal · x = offset` of the affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equation {
    #[serde(serialize_with = "serial::int_vec")]
    pub normal: Vec<Int>,
    #[serde(serialize_with = "serial::int")]
    pub offset: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullStructure {
    dim: usize,
    affine_dim: usize,
    #[serde(skip)]
    generators: Vec<LatticePoint>,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    equations: Vec<Equation>,
}

impl HullStructure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// The deduplicated input points, sorted lexicographically.
    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    /// Vertices, sorted lexicographically.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Facets, sorted by `(normal, offset)`.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Affine-hull equations; empty when full-dimensional.
    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn facet_vertices(&self, facet: &Facet) -> Vec<LatticePoint> {
        facet.vertices.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    pub fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::Degenerate {
                affine_dim: self.affine_dim,
                dim: self.dim,
            })
        }
    }

    pub fn is_vertex(&self, p: &LatticePoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    fn on_affine_hull(&self, p: &LatticePoint) -> bool {
        self.equations.iter().all(|e| p.dot(&e.normal) == e.offset)
    }

    pub fn contains_lattice(&self, p: &LatticePoint, mode: Containment) -> bool {
        match mode {
            Containment::Closed => {
                self.on_affine_hull(p) && self.facets.iter().all(|f| p.dot(&f.normal) <= f.offset)
            }
            Containment::Open => {
                self.is_full_dimensional() && self.facets.iter().all(|f| p.dot(&f.normal) < f.offset)
            }
        }
    }

    pub fn contains(&self, p: &RationalPoint, mode: Containment) -> bool {
        let (q, v) = p.scaled_to_integer();
        let cmp = |normal: &[Int], offset: &Int| dot(normal, &v).cmp(&(offset * &q));
        match mode {
            Containment::Closed => {
                self.equations.iter().all(|e| cmp(&e.normal, &e.offset).is_eq())
                    && self.facets.iter().all(|f| cmp(&f.normal, &f.offset).is_le())
            }
            Containment::Open => {
                self.is_full_dimensional() && self.facets.iter().all(|f| cmp(&f.normal, &f.offset).is_lt())
            }
        }
    }

    /// Indices of facets whose inequality is tight at `p`.
    pub fn tight_facets(&self, p: &LatticePoint) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| p.dot(&f.normal) == f.offset)
            .map(|(i, _)| i)
            .collect()
    }

    /// Minimum and maximum of `⟨x, v⟩` over the hull, with lexicographically
    /// smallest attaining vertices: `(min, argmin, max, argmax)`.
    pub fn linear_extremes(&self, v: &[Int]) -> (Int, &LatticePoint, Int, &LatticePoint) {
        let mut it = self.vertices.iter();
        let first = it.next().expect("hull has at least one vertex");
        let f = first.dot(v);
        let (mut lo, mut lo_at, mut hi, mut hi_at) = (f.clone(), first, f, first);
        for p in it {
            let x = p.dot(v);
            if x < lo {
                lo = x.clone();
                lo_at = p;
            }
            if x > hi {
                hi = x;
                hi_at = p;
            }
        }
        (lo, lo_at, hi, hi_at)
    }

    /// Componentwise bounding box of the vertices.
    pub fn bounding_box(&self) -> (Vec<Int>, Vec<Int>) {
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for p in &self.vertices[1..] {
            for (i, c) in p.coords().iter().enumerate() {
                if *c < lo[i] {
                    lo[i] = c.clone();
                }
                if *c > hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        (lo, hi)
    }

    pub fn translate(&self, t: &LatticePoint) -> HullStructure {
        let shift = |normal: &[Int], offset: &Int| offset + t.dot(normal);
        HullStructure {
            dim: self.dim,
            affine_dim: self.affine_dim,
            generators: self.generators.iter().map(|p| p.add(t)).collect(),
            vertices: self.vertices.iter().map(|p| p.add(t)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: shift(&f.normal, &f.offset),
                    vertices: f.vertices.clone(),
                })
                .collect(),
            equations: self
                .equations
                .iter()
                .map(|e| Equation {
                    normal: e.normal.clone(),
                    offset: shift(&e.normal, &e.offset),
                })
                .collect(),
        }
    }
}

/// The body `center + scale · (hull − center)`.
#[derive(Clone, Debug)]
pub struct ScaledBody {
    hull: HullStructure,
    center: RationalPoint,
    scale: Rat,
}

impl ScaledBody {
    pub fn new(hull: HullStructure, center: RationalPoint, scale: Rat) -> Result<Self> {
        if center.dim() != hull.dim() {
            return Err(Error::DimensionMismatch {
                expected: hull.dim(),
                found: center.dim(),
            });
        }
        if !scale.is_positive() {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        Ok(Self { hull, center, scale })
    }

    pub fn hull(&self) -> &HullStructure {
        &self.hull
    }

    pub fn center(&self) -> &RationalPoint {
        &self.center
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn dim(&self) -> usize {
        self.hull.dim()
    }

    fn map(&self, p: &LatticePoint) -> RationalPoint {
        RationalPoint(
            p.coords()
                .iter()
                .zip(self.center.coords())
                .map(|(x, c)| c + &self.scale * (Rat::from_integer(x.clone()) - c))
                .collect(),
        )
    }

    pub fn vertices(&self) -> Vec<RationalPoint> {
        self.hull.vertices().iter().map(|p| self.map(p)).collect()
    }

    /// Right-hand side of a hull inequality after scaling about the center.
    fn scaled_offset(&self, normal: &[Int], offset: &Int) -> Rat {
        let nc = dot_rat(normal, self.center.coords());
        &nc + &self.scale * (Rat::from_integer(offset.clone()) - &nc)
    }

    pub fn contains(&self, p: &RationalPoint, mode: Containment) -> bool {
        let eq_ok = || {
            self.hull
                .equations()
                .iter()
                .all(|e| dot_rat(&e.normal, p.coords()) == self.scaled_offset(&e.normal, &e.offset))
        };
        let val = |f: &Facet| {
            (
                dot_rat(&f.normal, p.coords()),
                self.scaled_offset(&f.normal, &f.offset),
            )
        };
        match mode {
            Containment::Closed => {
                eq_ok()
                    && self.hull.facets().iter().all(|f| {
                        let (a, b) = val(f);
                        a <= b
                    })
            }
            Containment::Open => {
                self.hull.is_full_dimensional()
                    && self.hull.facets().iter().all(|f| {
                        let (a, b) = val(f);
                        a < b
                    })
            }
        }
    }

    pub fn linear_range(&self, v: &[Int]) -> (Rat, Rat) {
        let (lo, _, hi, _) = self.hull.linear_extremes(v);
        let nc = dot_rat(v, self.center.coords());
        let map = |x: Int| &nc + &self.scale * (Rat::from_integer(x) - &nc);
        (map(lo), map(hi))
    }
}

/// Affine dimension of a point set: the rank of its difference vectors.
pub fn affine_dimension(points: &[LatticePoint]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let mut e = Echelon::new();
    for p in &points[1..] {
        e.insert(p.sub(base).coords());
    }
    e.rank()
}

fn check_dims(points: &[LatticePoint]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
    }
    Ok(d)
}

/// Hyperplane through `r` affinely independent points of `Z^r`, as a
/// primitive normal and offset. The normal is the generalized cross product
/// of the difference vectors.
fn hyperplane_through(pts: &[&[Int]]) -> (Vec<Int>, Int) {
    let r = pts[0].len();
    let diffs: Vec<Vec<Int>> = pts[1..]
        .iter()
        .map(|q| q.iter().zip(pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    let mut normal = Vec::with_capacity(r);
    for j in 0..r {
        let minor: Vec<Vec<Int>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let m = arith::det(minor);
        normal.push(if j % 2 == 0 { m } else { -m });
    }
    let g = gcd_all(&normal);
    debug_assert!(!g.is_zero(), "hyperplane through dependent points");
    let normal: Vec<Int> = normal.into_iter().map(|x| x / &g).collect();
    let offset = dot(&normal, pts[0]);
    (normal, offset)
}

struct SimplexFacet {
    verts: Vec<usize>,
    normal: Vec<Int>,
    offset: Int,
}

/// Beneath-beyond over full-dimensional input in `Z^r`. `simplex` indexes
/// `r + 1` affinely independent points. Returns boundary simplices.
fn triangulated_boundary(pts: &[Vec<Int>], simplex: &[usize]) -> Vec<SimplexFacet> {
    let r = pts[0].len();
    let scale = Int::from(simplex.len() as u64);
    let mut interior = vec![Int::zero(); r];
    for &i in simplex {
        for (c, x) in interior.iter_mut().zip(&pts[i]) {
            *c += x;
        }
    }

    let make = |verts: Vec<usize>| -> SimplexFacet {
        let refs: Vec<&[Int]> = verts.iter().map(|&i| pts[i].as_slice()).collect();
        let (mut normal, mut offset) = hyperplane_through(&refs);
        if dot(&normal, &interior) > &offset * &scale {
            normal.iter_mut().for_each(|x| *x = -x.clone());
            offset = -offset;
        }
        SimplexFacet {
            verts,
            normal,
            offset,
        }
    };

    let mut facets: Vec<SimplexFacet> = (0..simplex.len())
        .map(|skip| {
            let mut v: Vec<usize> = simplex
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &i)| i)
                .collect();
            v.sort_unstable();
            make(v)
        })
        .collect();

    for (idx, p) in pts.iter().enumerate() {
        if simplex.contains(&idx) {
            continue;
        }
        let visible: Vec<bool> = facets.iter().map(|f| dot(&f.normal, p) > f.offset).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for (f, _) in facets.iter().zip(&visible).filter(|(_, &v)| v) {
            for skip in 0..f.verts.len() {
                let ridge: Vec<usize> = f
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &i)| i)
                    .collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort();
        let mut keep = visible.iter();
        facets.retain(|_| !*keep.next().unwrap());
        for mut ridge in horizon {
            ridge.push(idx);
            ridge.sort_unstable();
            facets.push(make(ridge));
        }
    }
    facets
}

/// Keeps only the lowest and highest point on every line parallel to the
/// last axis; the others lie strictly between two input points.
fn axis_line_extremes(pts: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let r = pts[0].len();
    let mut lines: BTreeMap<Vec<Int>, (Vec<Int>, Vec<Int>)> = BTreeMap::new();
    for p in pts {
        let key = p[..r - 1].to_vec();
        match lines.get_mut(&key) {
            None => {
                lines.insert(key, (p.clone(), p));
            }
            Some((lo, hi)) => {
                if p[r - 1] < lo[r - 1] {
                    *lo = p;
                } else if p[r - 1] > hi[r - 1] {
                    *hi = p;
                }
            }
        }
    }
    let mut out = Vec::new();
    for (_, (lo, hi)) in lines {
        if lo != hi {
            out.push(lo);
        }
        out.push(hi);
    }
    out
}

/// Convex hull of a nonempty set of lattice points of common dimension.
pub fn convex_hull(points: &[LatticePoint]) -> Result<HullStructure> {
    let d = check_dims(points)?;
    let mut gens = points.to_vec();
    gens.sort();
    gens.dedup();

    let base = gens[0].clone();
    let mut basis = Echelon::new();
    let mut basis_pts = vec![0usize];
    for (i, p) in gens.iter().enumerate().skip(1) {
        if basis.insert(p.sub(&base).coords()) {
            basis_pts.push(i);
        }
    }
    let r = basis.rank();
    let equations: Vec<Equation> = basis
        .integer_kernel(d)
        .into_iter()
        .map(|normal| {
            let offset = base.dot(&normal);
            Equation { normal, offset }
        })
        .collect();

    if r == 0 {
        return Ok(HullStructure {
            dim: d,
            affine_dim: 0,
            vertices: vec![base],
            generators: gens,
            facets: Vec::new(),
            equations,
        });
    }

    // Coordinates on which the affine hull projects injectively.
    let mut cols = Vec::with_capacity(r);
    let mut col_rank = Echelon::new();
    for c in 0..d {
        let column: Vec<Int> = basis_pts[1..]
            .iter()
            .map(|&i| &gens[i].coords()[c] - &base.coords()[c])
            .collect();
        if col_rank.insert(&column) {
            cols.push(c);
        }
        if cols.len() == r {
            break;
        }
    }
    let project = |p: &LatticePoint| -> Vec<Int> { cols.iter().map(|&c| p.coords()[c].clone()).collect() };

    // Projected candidates (sorted, hence lexicographic insertion order), the
    // basis simplex first so its indices are fixed.
    let simplex_proj: Vec<Vec<Int>> = basis_pts.iter().map(|&i| project(&gens[i])).collect();
    let mut rest: Vec<Vec<Int>> = axis_line_extremes(gens.iter().map(project).collect());
    rest.retain(|p| !simplex_proj.contains(p));
    let mut pts = simplex_proj;
    pts.extend(rest);
    let simplex: Vec<usize> = (0..=r).collect();

    let boundary = triangulated_boundary(&pts, &simplex);

    let mut merged: BTreeMap<(Vec<Int>, Int), ()> = BTreeMap::new();
    for f in &boundary {
        merged.insert((f.normal.clone(), f.offset.clone()), ());
    }
    let proj_facets: Vec<(Vec<Int>, Int)> = merged.into_keys().collect();

    // A boundary point is a vertex iff its tight facet normals span Z^r.
    let mut on_boundary: Vec<usize> = boundary.iter().flat_map(|f| f.verts.clone()).collect();
    on_boundary.sort_unstable();
    on_boundary.dedup();
    let mut vertex_proj: Vec<Vec<Int>> = Vec::new();
    for i in on_boundary {
        let p = &pts[i];
        let mut e = Echelon::new();
        for (n, o) in &proj_facets {
            if dot(n, p) == *o {
                e.insert(n);
                if e.rank() == r {
                    break;
                }
            }
        }
        if e.rank() == r {
            vertex_proj.push(p.clone());
        }
    }

    // Lift back: projection is injective on the generators.
    let lift: HashMap<Vec<Int>, &LatticePoint> = gens.iter().map(|g| (project(g), g)).collect();
    let mut vertices: Vec<LatticePoint> = vertex_proj.iter().map(|p| lift[p].clone()).collect();
    vertices.sort();

    let mut facets: Vec<Facet> = proj_facets
        .into_iter()
        .map(|(pn, offset)| {
            let mut normal = vec![Int::zero(); d];
            for (k, &c) in cols.iter().enumerate() {
                normal[c] = pn[k].clone();
            }
            let incident = vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| v.dot(&normal) == offset)
                .map(|(i, _)| i)
                .collect();
            Facet {
                normal,
                offset,
                vertices: incident,
            }
        })
        .collect();
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

    Ok(HullStructure {
        dim: d,
        affine_dim: r,
        generators: gens,
        vertices,
        facets,
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn pts(raw: &[&[i64]]) -> Vec<LatticePoint> {
        raw.iter().map(|c| LatticePoint::from_i64(c)).collect()
    }

    fn cube(d: usize) -> Vec<LatticePoint> {
        (0..1u32 << d)
            .map(|m| LatticePoint::from_i64(&(0..d).map(|i| ((m >> i) & 1) as i64).collect::<Vec<_>>()))
            .collect()
    }

    #[test]
    fn triangle() {
        let h = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(h.vertices().len(), 3);
        assert_eq!(h.facets().len(), 3);
        assert_eq!(h.affine_dim(), 2);
        for f in h.facets() {
            assert_eq!(f.vertices.len(), 2);
        }
    }

    #[test]
    fn unit_cube() {
        let h = convex_hull(&cube(3)).unwrap();
        assert_eq!(h.vertices().len(), 8);
        assert_eq!(h.facets().len(), 6);
        for f in h.facets() {
            assert_eq!(f.vertices.len(), 4);
            assert_eq!(gcd_all(&f.normal), Int::one());
        }
    }

    #[test]
    fn redundant_points_are_not_vertices() {
        let h = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]])).unwrap();
        assert_eq!(
            h.vertices(),
            pts(&[&[0, 0], &[0, 2], &[2, 0], &[2, 2]]).as_slice()
        );
        assert_eq!(h.generators().len(), 6);
    }

    #[test]
    fn degenerate_inputs() {
        let single = convex_hull(&pts(&[&[3, 4, 5]])).unwrap();
        assert_eq!(single.affine_dim(), 0);
        assert_eq!(single.vertices().len(), 1);
        assert!(single.contains_lattice(&LatticePoint::from_i64(&[3, 4, 5]), Containment::Closed));
        assert!(!single.contains_lattice(&LatticePoint::from_i64(&[3, 4, 6]), Containment::Closed));

        let seg = convex_hull(&pts(&[&[0, 0, 0], &[1, 1, 0], &[2, 2, 0]])).unwrap();
        assert_eq!(seg.affine_dim(), 1);
        assert_eq!(seg.vertices(), pts(&[&[0, 0, 0], &[2, 2, 0]]).as_slice());
        assert!(seg.contains_lattice(&LatticePoint::from_i64(&[1, 1, 0]), Containment::Closed));
        assert!(!seg.contains_lattice(&LatticePoint::from_i64(&[1, 0, 0]), Containment::Closed));
        assert!(!seg.contains_lattice(&LatticePoint::from_i64(&[1, 1, 0]), Containment::Open));

        let square = convex_hull(&pts(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]])).unwrap();
        assert_eq!(square.affine_dim(), 2);
        assert_eq!(square.facets().len(), 4);
        assert_eq!(square.vertices().len(), 4);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = convex_hull(&pts(&[&[0, 0], &[1, 0, 0]])).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        ));
        assert!(matches!(convex_hull(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn open_and_closed_containment() {
        let h = convex_hull(&cube(2)).unwrap();
        let half = rat(1, 2);
        let center = RationalPoint::new(vec![half.clone(), half.clone()]);
        assert!(h.contains(&center, Containment::Open));
        let edge = RationalPoint::new(vec![rat(0, 1), half]);
        assert!(!edge.coords().is_empty());
        assert!(!h.contains(&edge, Containment::Open));
        assert!(h.contains(&edge, Containment::Closed));

        let simplex = convex_hull(&pts(&[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])).unwrap();
        let p = LatticePoint::from_i64(&[1, 1, 1]);
        assert!(!simplex.contains_lattice(&p, Containment::Open));
        assert!(simplex.contains_lattice(&p, Containment::Closed));
    }

    #[test]
    fn affine_dimension_examples() {
        assert_eq!(affine_dimension(&pts(&[&[0, 0]])), 0);
        assert_eq!(affine_dimension(&pts(&[&[0, 0], &[1, 0], &[2, 0]])), 1);
        assert_eq!(affine_dimension(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), 2);
    }

    #[test]
    fn direction_normalization() {
        let v = Direction::from_i64(&[0, -2, 4]).unwrap();
        assert_eq!(v, Direction::from_i64(&[0, 1, -2]).unwrap());
        assert_eq!(v.as_slice(), &[Int::zero(), Int::one(), Int::from(-2)]);
        assert!(matches!(Direction::from_i64(&[0, 0]), Err(Error::ZeroDirection)));
    }

    #[test]
    fn translation_shifts_offsets() {
        let h = convex_hull(&cube(2)).unwrap();
        let t = LatticePoint::from_i64(&[5, -3]);
        let moved = h.translate(&t);
        let rebuilt = convex_hull(&cube(2).iter().map(|p| p.add(&t)).collect::<Vec<_>>()).unwrap();
        assert_eq!(moved, rebuilt);
    }
}
