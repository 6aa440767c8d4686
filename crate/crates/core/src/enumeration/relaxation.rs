//! Moving every edge of a polygon outward by lattice distance one.

use crate::enumeration::oracle::search_interior_witness;
use crate::error::EnumerationError;
use crate::lattice::{convex_hull, Dimension, LatticePoint, LatticePolygon};
use crate::scalar::Coord;

/// Outcome of relaxing a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxationResult<T> {
    /// Whether the relaxed region is a lattice polygon.
    pub integral: bool,
    /// The relaxed polygon when integral.
    pub relaxed: Option<LatticePolygon<T>>,
}

/// Closed half plane `a·x + b·y <= c`.
#[derive(Clone, Debug)]
pub(crate) struct HalfPlane<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Coord> HalfPlane<T> {
    pub fn contains(&self, p: &LatticePoint<T>) -> bool {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() <= self.c
    }
}

/// A vertex of the relaxed region: `(x / den, y / den)` with `den > 0`.
#[derive(Clone, Debug)]
pub(crate) struct RationalPoint<T> {
    pub x: T,
    pub y: T,
    pub den: T,
}

/// The half planes `n·x <= c + 1`, one per edge, with `n` the primitive
/// outer normal of the edge.
pub(crate) fn relaxed_halfplanes<T: Coord>(polygon: &LatticePolygon<T>) -> Vec<HalfPlane<T>> {
    polygon
        .edges()
        .map(|(p, q)| {
            let d = q.sub(p);
            let g = d.x.gcd(&d.y);
            let (a, b) = (d.y / g.clone(), -(d.x / g));
            let c = a.clone() * p.x.clone() + b.clone() * p.y.clone() + T::one();
            HalfPlane { a, b, c }
        })
        .collect()
}

/// Vertices of `⋂ halfplanes`, assumed bounded and full-dimensional.
pub(crate) fn region_vertices<T: Coord>(planes: &[HalfPlane<T>]) -> Vec<RationalPoint<T>> {
    let mut out = Vec::new();
    for i in 0..planes.len() {
        for j in (i + 1)..planes.len() {
            let (p, q) = (&planes[i], &planes[j]);
            let mut det = p.a.clone() * q.b.clone() - p.b.clone() * q.a.clone();
            if det.is_zero() {
                continue;
            }
            let mut x = p.c.clone() * q.b.clone() - q.c.clone() * p.b.clone();
            let mut y = p.a.clone() * q.c.clone() - q.a.clone() * p.c.clone();
            if det.is_negative() {
                det = -det;
                x = -x;
                y = -y;
            }
            let feasible = planes.iter().all(|h| {
                h.a.clone() * x.clone() + h.b.clone() * y.clone() <= h.c.clone() * det.clone()
            });
            if feasible {
                out.push(RationalPoint { x, y, den: det });
            }
        }
    }
    out
}

/// Every lattice point of the relaxed region of a full-dimensional polygon.
pub(crate) fn relaxed_lattice_points<T: Coord>(
    polygon: &LatticePolygon<T>,
) -> Vec<LatticePoint<T>> {
    let planes = relaxed_halfplanes(polygon);
    let verts = region_vertices(&planes);
    let xmin = verts.iter().map(|v| v.x.ceil_div(&v.den)).min().unwrap();
    let xmax = verts.iter().map(|v| v.x.div_floor(&v.den)).max().unwrap();
    let ymin = verts.iter().map(|v| v.y.ceil_div(&v.den)).min().unwrap();
    let ymax = verts.iter().map(|v| v.y.div_floor(&v.den)).max().unwrap();
    let mut pts = Vec::new();
    let mut x = xmin;
    while x <= xmax {
        let mut y = ymin.clone();
        while y <= ymax {
            let p = LatticePoint::new(x.clone(), y.clone());
            if planes.iter().all(|h| h.contains(&p)) {
                pts.push(p);
            }
            y = y + T::one();
        }
        x = x + T::one();
    }
    pts
}

/// Relax every edge `n·x <= c` of a full-dimensional polygon to
/// `n·x <= c + 1`. The result is integral exactly when the polygon occurs as
/// the interior polygon of some lattice polygon; the relaxed polygon is then
/// the largest such.
///
/// Points and segments have no edges to move. For them the relaxed polygon
/// is a witness found by bounded search.
pub fn relaxation<T: Coord>(
    polygon: &LatticePolygon<T>,
) -> Result<RelaxationResult<T>, EnumerationError> {
    match polygon.dimension() {
        Dimension::Empty => Err(EnumerationError::Geometry(
            crate::error::GeometryError::Empty,
        )),
        Dimension::Point | Dimension::Segment => {
            let witness = search_interior_witness(polygon, 3, 40);
            Ok(RelaxationResult {
                integral: witness.is_some(),
                relaxed: witness,
            })
        }
        Dimension::Full => {
            let verts = region_vertices(&relaxed_halfplanes(polygon));
            let integral = verts.iter().all(|v| {
                (v.x.clone() % v.den.clone()).is_zero() && (v.y.clone() % v.den.clone()).is_zero()
            });
            if !integral {
                return Ok(RelaxationResult {
                    integral: false,
                    relaxed: None,
                });
            }
            let pts: Vec<_> = verts
                .into_iter()
                .map(|v| LatticePoint::new(v.x / v.den.clone(), v.y / v.den))
                .collect();
            Ok(RelaxationResult {
                integral: true,
                relaxed: Some(convex_hull(&pts)),
            })
        }
    }
}

/// Whether some full-dimensional lattice polygon has interior polygon
/// equivalent to `polygon`.
pub fn realizable_as_interior<T: Coord>(polygon: &LatticePolygon<T>) -> bool {
    match polygon.dimension() {
        Dimension::Empty => false,
        _ => relaxation(polygon).map(|r| r.integral).unwrap_or(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::simplex;

    fn poly(p: &[(i64, i64)]) -> LatticePolygon<i64> {
        LatticePolygon::from_i64_pairs(p)
    }

    #[test]
    fn point_relaxation_has_a_witness() {
        let r = relaxation(&poly(&[(0, 0)])).unwrap();
        assert!(r.integral);
        let w = r.relaxed.unwrap();
        assert_eq!(w.interior_polygon(), poly(&[(0, 0)]));
        assert_eq!(simplex::<i64>(3).interior_polygon().vertices().len(), 1);
    }

    #[test]
    fn unit_square_relaxes_to_big_square() {
        let r = relaxation(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        let big = poly(&[(-1, -1), (2, -1), (2, 2), (-1, 2)]);
        assert_eq!(r.relaxed.as_ref(), Some(&big));
        assert_eq!(
            big.interior_polygon(),
            poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
        );
    }

    #[test]
    fn two_simplex_relaxes_to_five_simplex() {
        let p = poly(&[(1, 1), (3, 1), (1, 3)]);
        let r = relaxation(&p).unwrap();
        assert_eq!(r.relaxed, Some(simplex(5)));
        assert_eq!(simplex::<i64>(5).interior_polygon(), p);
    }

    #[test]
    fn non_integral_relaxation() {
        // conv{(0,0),(3,0),(0,1)}: x = -1 meets x + 3y = 4 at y = 5/3
        let p = poly(&[(0, 0), (3, 0), (0, 1)]);
        let r = relaxation(&p).unwrap();
        assert!(!r.integral);
        assert!(r.relaxed.is_none());
        assert!(!realizable_as_interior(&p));
    }

    #[test]
    fn segments_are_realizable() {
        assert!(realizable_as_interior(&poly(&[(0, 0), (1, 0)])));
        let slab = poly(&[(-1, 0), (2, 0), (0, 1), (0, -1)]);
        assert_eq!(slab.interior_polygon(), poly(&[(0, 0), (1, 0)]));
        assert!(!realizable_as_interior(&LatticePolygon::<i64>::empty()));
    }
}
