//! Brute-force geometry on small `i64` inputs, sharing no code with the
//! library. Only meant for tiny point sets.

#![allow(dead_code)]

use hollowlat::LatticePoint;

pub type P = Vec<i64>;

pub fn to_i64(p: &LatticePoint) -> P {
    p.coords().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

pub fn to_lattice(p: &[i64]) -> LatticePoint {
    LatticePoint::from_i64(p)
}

pub fn lattice_vec(ps: &[P]) -> Vec<LatticePoint> {
    ps.iter().map(|p| to_lattice(p)).collect()
}

fn orient(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: &[i64], b: &[i64], p: &[i64]) -> bool {
    orient(a, b, p) == 0
        && p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

fn in_triangle(a: &[i64], b: &[i64], c: &[i64], p: &[i64]) -> bool {
    if orient(a, b, c) == 0 {
        return on_segment(a, b, p) || on_segment(b, c, p) || on_segment(a, c, p);
    }
    let s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)];
    s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0)
}

/// Closed planar hull membership via Carathéodory: some triangle (possibly
/// degenerate) of the input contains `p`.
pub fn in_hull_2d(s: &[P], p: &[i64]) -> bool {
    if s.len() == 1 {
        return s[0] == p;
    }
    if s.len() == 2 {
        return on_segment(&s[0], &s[1], p);
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for k in j + 1..s.len() {
                if in_triangle(&s[i], &s[j], &s[k], p) {
                    return true;
                }
            }
        }
    }
    false
}

/// Points of `s` not in the hull of the others, sorted and deduplicated.
pub fn vertices_2d(s: &[P]) -> Vec<P> {
    let mut pts = s.to_vec();
    pts.sort();
    pts.dedup();
    let mut out: Vec<P> = pts
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<P> = pts
                .iter()
                .enumerate()
                .filter(|(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            others.is_empty() || !in_hull_2d(&others, p)
        })
        .map(|(_, p)| p.clone())
        .collect();
    out.sort();
    out
}

/// Whether `p` lies on a supporting line through two input points, i.e. on
/// the boundary of a full-dimensional planar hull.
pub fn on_boundary_2d(s: &[P], p: &[i64]) -> bool {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] == s[j] {
                continue;
            }
            let signs: Vec<i64> = s.iter().map(|q| orient(&s[i], &s[j], q).signum()).collect();
            let supporting = signs.iter().all(|&x| x >= 0) || signs.iter().all(|&x| x <= 0);
            if supporting && orient(&s[i], &s[j], p) == 0 {
                return true;
            }
        }
    }
    false
}

pub fn bbox(s: &[P]) -> (P, P) {
    let d = s[0].len();
    let lo = (0..d).map(|i| s.iter().map(|p| p[i]).min().unwrap()).collect();
    let hi = (0..d).map(|i| s.iter().map(|p| p[i]).max().unwrap()).collect();
    (lo, hi)
}

pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<P> {
    let mut out = vec![vec![]];
    for i in 0..lo.len() {
        out = out
            .into_iter()
            .flat_map(|p: P| {
                (lo[i]..=hi[i]).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn lattice_points_2d(s: &[P]) -> Vec<P> {
    let (lo, hi) = bbox(s);
    box_points(&lo, &hi)
        .into_iter()
        .filter(|p| in_hull_2d(s, p))
        .collect()
}

pub fn interior_points_2d(s: &[P]) -> Vec<P> {
    lattice_points_2d(s)
        .into_iter()
        .filter(|p| !on_boundary_2d(s, p))
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn gcd_vec(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `min` over primitive `v` with `‖v‖∞ <= r` of `max v·x - min v·x`.
pub fn brute_lattice_width(s: &[P], r: i64) -> i64 {
    let d = s[0].len();
    box_points(&vec![-r; d], &vec![r; d])
        .into_iter()
        .filter(|v| gcd_vec(v) == 1)
        .map(|v| {
            let vals: Vec<i64> = s.iter().map(|p| dot(p, &v)).collect();
            vals.iter().max().unwrap() - vals.iter().min().unwrap()
        })
        .min()
        .unwrap()
}

pub fn longest_segment(points: &[P]) -> i64 {
    let mut best = 0;
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            let diff: P = x.iter().zip(y).map(|(a, b)| b - a).collect();
            best = best.max(gcd_vec(&diff));
        }
    }
    best
}

/// Cofactor expansion.
pub fn det(m: &[P]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<P> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| *x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// Primitive normals with offsets of all supporting hyperplanes spanned by
/// `d` affinely independent input points, oriented so the input lies on the
/// `<=` side. These are exactly the facet hyperplanes.
pub fn facets_bruteforce(s: &[P]) -> Vec<(P, i64)> {
    let d = s[0].len();
    let mut out: Vec<(P, i64)> = Vec::new();
    let idx: Vec<usize> = (0..s.len()).collect();
    for combo in combinations(&idx, d) {
        let base = &s[combo[0]];
        let rows: Vec<P> = combo[1..]
            .iter()
            .map(|&i| s[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let mut normal: P = (0..d)
            .map(|j| {
                let minor: Vec<P> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                if j % 2 == 0 {
                    det(&minor)
                } else {
                    -det(&minor)
                }
            })
            .collect();
        let g = gcd_vec(&normal);
        if g == 0 {
            continue;
        }
        normal.iter_mut().for_each(|x| *x /= g);
        let offset = dot(&normal, base);
        let vals: Vec<i64> = s.iter().map(|p| dot(&normal, p)).collect();
        let (normal, offset) = if vals.iter().all(|&v| v <= offset) {
            (normal, offset)
        } else if vals.iter().all(|&v| v >= offset) {
            (normal.iter().map(|x| -x).collect(), -offset)
        } else {
            continue;
        };
        if !out.contains(&(normal.clone(), offset)) {
            out.push((normal, offset));
        }
    }
    out.sort();
    out
}

pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    with.extend(combinations(&items[1..], k));
    with
}
