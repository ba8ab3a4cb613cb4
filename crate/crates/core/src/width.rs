//! Directional and lattice width, lattice-hyperplane counts, the ℓ∞
//! inradius, and flatness audits.
//!
//! Lattice width is certified by enumerating primitive directions in shells
//! of increasing ℓ1 norm. If the axis cube `c + [-ρ, ρ]^d` fits in the hull
//! then `w_v >= 2ρ‖v‖₁`, so once `2ρ n` exceeds the best width found no
//! direction of norm `n` or more can improve on it.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{ceil_rat, floor_rat, gcd_all, Int, Rat};
use crate::error::{Error, Result};
use crate::exactgeo::{Direction, HullStructure, LatticePoint, RationalPoint, ScaledBody};
use crate::lattice::{first_interior_lattice_point, scaled_body_lattice_points};
use crate::lp::{self, Constraint, LpOutcome, Relation};
use crate::serial;

/// Anything with an exact range of a linear functional.
pub trait LinearRange {
    fn linear_range(&self, v: &[Int]) -> (Rat, Rat);
}

impl LinearRange for HullStructure {
    fn linear_range(&self, v: &[Int]) -> (Rat, Rat) {
        let (lo, _, hi, _) = self.linear_extremes(v);
        (Rat::from_integer(lo), Rat::from_integer(hi))
    }
}

impl LinearRange for ScaledBody {
    fn linear_range(&self, v: &[Int]) -> (Rat, Rat) {
        ScaledBody::linear_range(self, v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellRecord {
    pub l1_norm: u64,
    pub directions: u64,
    #[serde(serialize_with = "serial::rat")]
    pub best_after: Rat,
}

/// Transcript showing that every direction outside the searched shells is
/// dominated: `2 * rho * stop_norm > best`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PruningCertificate {
    #[serde(serialize_with = "serial::rat")]
    pub rho: Rat,
    pub center: RationalPoint,
    pub shells: Vec<ShellRecord>,
    pub stop_norm: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthResult {
    pub direction: Direction,
    #[serde(serialize_with = "serial::rat")]
    pub value: Rat,
    #[serde(serialize_with = "serial::opt_rat")]
    pub lattice_width: Option<Rat>,
    pub argmax_vertex: LatticePoint,
    pub argmin_vertex: LatticePoint,
    #[serde(serialize_with = "serial::int")]
    pub hyperplane_count: Int,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PruningCertificate>,
}

fn check_direction(hull: &HullStructure, v: &Direction) -> Result<()> {
    if v.dim() != hull.dim() {
        return Err(Error::DimensionMismatch {
            expected: hull.dim(),
            found: v.dim(),
        });
    }
    Ok(())
}

/// Number of integers in `[lo, hi]`.
fn integers_between(lo: &Rat, hi: &Rat) -> Int {
    let n = floor_rat(hi) - ceil_rat(lo) + Int::one();
    if n.is_negative() {
        Int::zero()
    } else {
        n
    }
}

pub fn directional_width(hull: &HullStructure, v: &Direction) -> Result<WidthResult> {
    check_direction(hull, v)?;
    let (lo, lo_at, hi, hi_at) = hull.linear_extremes(v.as_slice());
    Ok(WidthResult {
        direction: v.clone(),
        value: Rat::from_integer(&hi - &lo),
        lattice_width: None,
        argmax_vertex: hi_at.clone(),
        argmin_vertex: lo_at.clone(),
        hyperplane_count: &hi - &lo + Int::one(),
        certificate: None,
    })
}

/// Number of lattice hyperplanes `⟨x, v⟩ = c` (integer `c`) meeting the body.
pub fn count_lattice_hyperplanes<B: LinearRange>(body: &B, v: &Direction) -> Int {
    let (lo, hi) = body.linear_range(v.as_slice());
    integers_between(&lo, &hi)
}

/// Largest `ρ` and a center `c` with `c + [-ρ, ρ]^d` inside the hull, by
/// exact LP over the facet inequalities.
pub fn linf_inradius(hull: &HullStructure) -> Result<(Rat, RationalPoint)> {
    hull.require_full_dimensional()?;
    let d = hull.dim();
    // Variables: c_1..c_d (free), rho (nonnegative).
    let constraints: Vec<Constraint> = hull
        .facets()
        .iter()
        .map(|f| {
            let mut coeffs: Vec<Rat> = f.normal.iter().cloned().map(Rat::from_integer).collect();
            coeffs.push(Rat::from_integer(crate::arith::l1_norm(&f.normal)));
            Constraint::new(coeffs, Relation::Le, Rat::from_integer(f.offset.clone()))
        })
        .collect();
    let mut objective = vec![Rat::zero(); d + 1];
    objective[d] = Rat::one();
    let mut free = vec![true; d + 1];
    free[d] = false;
    match lp::maximize(&objective, &constraints, &free) {
        LpOutcome::Optimal { value, mut point } => {
            point.truncate(d);
            Ok((value, RationalPoint::new(point)))
        }
        other => Err(Error::InvariantViolation(format!(
            "inradius LP of a bounded full-dimensional hull returned {other:?}"
        ))),
    }
}

/// Calls `visit` on every sign-canonical primitive vector of dimension `d`
/// with ℓ1 norm exactly `n`.
pub fn for_each_primitive_direction(d: usize, n: u64, mut visit: impl FnMut(Direction)) {
    fn rec(prefix: &mut Vec<i64>, d: usize, left: i64, leading: bool, emit: &mut dyn FnMut(&[i64])) {
        if prefix.len() == d {
            emit(prefix);
            return;
        }
        let last = prefix.len() + 1 == d;
        let start = if last { left } else { 0 };
        for a in start..=left {
            let signs: &[i64] = if a == 0 || leading { &[1] } else { &[1, -1] };
            for &s in signs {
                prefix.push(s * a);
                rec(prefix, d, left - a, leading && a == 0, emit);
                prefix.pop();
            }
        }
    }

    if n == 0 || d == 0 {
        return;
    }
    let mut emit = |v: &[i64]| {
        let ints: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
        if gcd_all(&ints).is_one() {
            visit(Direction::new(ints).expect("nonzero primitive vector"));
        }
    };
    rec(&mut Vec::with_capacity(d), d, n as i64, true, &mut emit);
}

/// Tie-break among minimizers: the lexicographically greatest canonical
/// direction wins.
fn improves(value: &Rat, dir: &Direction, best: &Option<(Rat, Direction)>) -> bool {
    match best {
        None => true,
        Some((bv, bd)) => value < bv || (value == bv && dir > bd),
    }
}

/// Exact lattice width with a pruning certificate.
pub fn lattice_width(hull: &HullStructure) -> Result<WidthResult> {
    hull.require_full_dimensional()?;
    let d = hull.dim();
    let (rho, center) = linf_inradius(hull)?;
    if !rho.is_positive() {
        return Err(Error::InvariantViolation(
            "full-dimensional hull has zero inradius".into(),
        ));
    }
    let two_rho = &rho * Rat::from_integer(Int::from(2));

    let mut best: Option<(Rat, Direction)> = None;
    let mut shells = Vec::new();
    let mut n = 1u64;
    loop {
        let mut count = 0u64;
        for_each_primitive_direction(d, n, |v| {
            count += 1;
            let (lo, _, hi, _) = hull.linear_extremes(v.as_slice());
            let w = Rat::from_integer(hi - lo);
            if improves(&w, &v, &best) {
                best = Some((w, v));
            }
        });
        let best_value = best
            .as_ref()
            .map(|(w, _)| w.clone())
            .expect("shell 1 is nonempty");
        shells.push(ShellRecord {
            l1_norm: n,
            directions: count,
            best_after: best_value.clone(),
        });
        n += 1;
        // Directions of norm n tie at best at most when 2ρn == best.
        if &two_rho * Rat::from_integer(Int::from(n)) > best_value {
            break;
        }
    }

    let (value, direction) = best.expect("at least one direction examined");
    let mut result = directional_width(hull, &direction)?;
    debug_assert_eq!(result.value, value);
    result.lattice_width = Some(value);
    result.certificate = Some(PruningCertificate {
        rho,
        center,
        shells,
        stop_norm: n,
    });
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlatnessAudit {
    pub dim: usize,
    #[serde(serialize_with = "serial::rat")]
    pub lattice_width: Rat,
    pub direction: Direction,
    /// `d (ln d)^3`, decimal approximation; the bound's constant is unknown so
    /// only the ratio is reported, never a verdict.
    pub reference_approx: String,
    pub ratio_approx: String,
    pub half_scaled: HalfScaledCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfScaledCheck {
    pub center: RationalPoint,
    #[serde(serialize_with = "serial::rat")]
    pub lattice_width: Rat,
    pub lattice_points: Vec<LatticePoint>,
    pub lattice_free: bool,
}

/// Average of the hull's vertices; interior when the hull is full-dimensional.
pub fn vertex_centroid(hull: &HullStructure) -> RationalPoint {
    let n = Int::from(hull.vertices().len() as u64);
    let d = hull.dim();
    let mut sum = vec![Int::zero(); d];
    for v in hull.vertices() {
        for (s, x) in sum.iter_mut().zip(v.coords()) {
            *s += x;
        }
    }
    RationalPoint::new(sum.into_iter().map(|s| Rat::new(s, n.clone())).collect())
}

/// `K = c + ½(hull − c)`. When `c` is interior and the hull is hollow, every
/// point of `K` is the midpoint of `c` and a point of the hull, hence interior.
pub fn half_scaled_check(hull: &HullStructure, center: &RationalPoint) -> Result<HalfScaledCheck> {
    let body = ScaledBody::new(hull.clone(), center.clone(), Rat::new(Int::one(), Int::from(2)))?;
    let lattice_points = scaled_body_lattice_points(&body);
    let w = lattice_width(hull)?.value / Rat::from_integer(Int::from(2));
    Ok(HalfScaledCheck {
        center: center.clone(),
        lattice_width: w,
        lattice_free: lattice_points.is_empty(),
        lattice_points,
    })
}

pub fn flatness_reference(d: usize) -> f64 {
    let d = d as f64;
    d * d.ln().powi(3)
}

/// Reports `w_L` beside `d (ln d)^3` for a hull whose interior is lattice-free.
pub fn flatness_audit(hull: &HullStructure) -> Result<FlatnessAudit> {
    hull.require_full_dimensional()?;
    if let Some(witness) = first_interior_lattice_point(hull) {
        return Err(Error::NotHollow { witness });
    }
    let w = lattice_width(hull)?;
    let value = w.value.clone();
    let reference = flatness_reference(hull.dim());
    let ratio = if reference > 0.0 {
        format!("{:.6}", rat_to_f64(&value) / reference)
    } else {
        "undefined".to_string()
    };
    Ok(FlatnessAudit {
        dim: hull.dim(),
        lattice_width: value,
        direction: w.direction,
        reference_approx: format!("{reference:.6}"),
        ratio_approx: ratio,
        half_scaled: half_scaled_check(hull, &vertex_centroid(hull))?,
    })
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
