//! Brill–Noether arithmetic on `(g, d, r)` triples and gonality caps read off
//! Newton polygons.
//!
//! Gonality itself is never computed here; only upper bounds coming from
//! lattice width and lower thresholds coming from `ρ >= 0`.

use num_integer::Roots;

use crate::error::BnError;
use crate::lattice::{
    is_standard_simplex_multiple, lattice_width, LatticePolygon, WidthCertificate,
};
use crate::scalar::Coord;

/// Genus, degree and rank of a hypothetical divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorHypothesis {
    pub g: i64,
    pub d: i64,
    pub r: i64,
}

impl DivisorHypothesis {
    pub fn new(g: i64, d: i64, r: i64) -> Self {
        Self { g, d, r }
    }
}

/// `ρ(g, d, r) = g - (r+1)(g - d + r)`.
pub fn rho(h: &DivisorHypothesis) -> i64 {
    h.g - (h.r + 1) * (h.g - h.d + h.r)
}

/// Smallest degree `d` with `ρ(g, d, r) >= 0`, i.e. `g + r - ⌊g/(r+1)⌋`.
pub fn min_degree_nonneg_rho(g: i64, r: i64) -> i64 {
    g + r - g.div_euclid(r + 1)
}

/// Residual triple `K - D` under Riemann–Roch: degree `2g-2-d`, rank
/// `r - d + g - 1`. An involution that preserves ρ.
pub fn serre_dual(h: &DivisorHypothesis) -> DivisorHypothesis {
    DivisorHypothesis {
        g: h.g,
        d: 2 * h.g - 2 - h.d,
        r: h.r - h.d + h.g - 1,
    }
}

/// Produces a triple of rank 1 (genus below 5) or rank at most 2 (genus 5
/// and 6) that still has negative ρ, by subtracting base points or passing
/// to the residual divisor.
pub fn reduce_to_low_rank(h: &DivisorHypothesis) -> Result<DivisorHypothesis, BnError> {
    if rho(h) >= 0 {
        return Err(BnError::Precondition(format!(
            "ρ({}, {}, {}) = {} is not negative",
            h.g,
            h.d,
            h.r,
            rho(h)
        )));
    }
    if h.r < 1 || !(0..=6).contains(&h.g) {
        return Err(BnError::Precondition(format!(
            "need r >= 1 and 0 <= g <= 6, got g = {}, r = {}",
            h.g, h.r
        )));
    }
    let target = if h.g < 5 { 1 } else { 2 };
    let mut cur = *h;
    // Each dual step strictly lowers the rank, so this terminates.
    while cur.r > target {
        let subtracted = DivisorHypothesis::new(cur.g, cur.d - (cur.r - target), target);
        let dual = serre_dual(&cur);
        let sub_ok = rho(&subtracted) < 0;
        let dual_ok = dual.r < cur.r && dual.r >= 1;
        cur = match (cur.d <= cur.g, sub_ok, dual_ok) {
            (true, true, _) => return Ok(subtracted),
            (false, _, true) => dual,
            (_, true, false) => return Ok(subtracted),
            (true, false, true) => dual,
            (_, false, false) => {
                return Err(BnError::Precondition(format!(
                    "no rank reduction applies to ({}, {}, {})",
                    cur.g, cur.d, cur.r
                )))
            }
        };
    }
    Ok(cur)
}

/// Largest integer `G` with `3(G-2)² <= 8g - 20`, the integer part of
/// `sqrt(8/3·(g - 5/2)) + 2`.
pub fn gonality_bound_theorem(g: i64) -> Result<i64, BnError> {
    if g < 3 {
        return Err(BnError::Precondition(format!(
            "genus must be >= 3, got {g}"
        )));
    }
    let k = ((8 * g - 20) / 3).sqrt();
    Ok(k + 2)
}

/// Genus and gonality of a smooth plane curve of degree `d`.
pub fn plane_curve_profile(d: i64) -> Result<(i64, i64), BnError> {
    if d < 1 {
        return Err(BnError::Precondition(format!(
            "degree must be >= 1, got {d}"
        )));
    }
    Ok(((d - 1) * (d - 2) / 2, d - 1))
}

/// Lattice width of a full-dimensional Newton polygon: an upper bound on
/// the gonality of any smooth curve it carries.
pub fn gonality_cap_from_width<T: Coord>(polygon: &LatticePolygon<T>) -> Result<T, BnError> {
    polygon.require_full()?;
    Ok(lattice_width(polygon).width)
}

/// `lw(Δ⁽¹⁾) + 2`, or `+ 3` when `Δ ≅ dΣ` with `d >= 2`, with `lw(∅) = -1`.
pub fn width_from_interior<T: Coord>(polygon: &LatticePolygon<T>) -> Result<T, BnError> {
    polygon.require_full()?;
    let inner = lattice_width(&polygon.interior_polygon()).width;
    // Σ itself has empty interior and width 1 = lw(∅) + 2, so only d >= 2
    // takes the +3 branch under the lw(∅) = -1 convention.
    let bump = match is_standard_simplex_multiple(polygon) {
        Some(d) if d > T::one() => 3,
        _ => 2,
    };
    Ok(inner + T::of(bump))
}

/// Everything the Newton polygon alone says about a smooth curve on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveProfile<T> {
    pub polygon: LatticePolygon<T>,
    pub interior_polygon: LatticePolygon<T>,
    pub genus_if_smooth: T,
    pub lw_delta: WidthCertificate<T>,
    pub lw_interior: WidthCertificate<T>,
    pub gonality_cap: T,
    pub simplex_d: Option<T>,
}

pub fn profile<T: Coord>(polygon: &LatticePolygon<T>) -> Result<CurveProfile<T>, BnError> {
    polygon.require_full()?;
    let interior_polygon = polygon.interior_polygon();
    let lw_delta = lattice_width(polygon);
    let lw_interior = lattice_width(&interior_polygon);
    let simplex_d = is_standard_simplex_multiple(polygon);
    let via_interior = width_from_interior(polygon)?;
    debug_assert_eq!(via_interior, lw_delta.width);
    Ok(CurveProfile {
        genus_if_smooth: polygon.count_interior_points(),
        gonality_cap: lw_delta.width.clone(),
        polygon: polygon.clone(),
        interior_polygon,
        lw_delta,
        lw_interior,
        simplex_d,
    })
}
