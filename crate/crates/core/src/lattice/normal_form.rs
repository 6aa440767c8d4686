//! Canonical representatives under affine unimodular equivalence.
//!
//! For a full-dimensional polygon every (vertex, traversal direction) pair
//! determines exactly one affine unimodular map that sends the vertex to the
//! origin, the outgoing edge onto the positive x-axis, the polygon into the
//! upper half plane, and the incoming neighbour into the strip `0 <= x < y`.
//! The normal form is the lexicographically least image vertex sequence over
//! all such pairs. Any equivalence permutes the pairs, so the minimum is an
//! invariant of the class.

use crate::lattice::map::AffineUnimodularMap;
use crate::lattice::point::LatticePoint;
use crate::lattice::polygon::{convex_hull, Dimension, LatticePolygon};
use crate::scalar::{extended_gcd, Coord};

/// The map realizing the candidate for vertex `i` traversed forward
/// (counterclockwise) or backward.
fn candidate_map<T: Coord>(
    vs: &[LatticePoint<T>],
    i: usize,
    forward: bool,
) -> AffineUnimodularMap<T> {
    let n = vs.len();
    let (next, prev) = if forward {
        (&vs[(i + 1) % n], &vs[(i + n - 1) % n])
    } else {
        (&vs[(i + n - 1) % n], &vs[(i + 1) % n])
    };
    let e = next.sub(&vs[i]);
    let g = e.x.gcd(&e.y);
    let (ex, ey) = (e.x / g.clone(), e.y / g);
    let (_, s, t) = extended_gcd(&ex, &ey);
    // rows (s, t) and (-ey, ex): det = s·ex + t·ey = 1, sends e to (g, 0)
    let (m11, m12, mut m21, mut m22) = (s, t, -ey.clone(), ex.clone());
    if !forward {
        m21 = -m21;
        m22 = -m22;
    }
    let w = prev.sub(&vs[i]);
    let px = m11.clone() * w.x.clone() + m12.clone() * w.y.clone();
    let py = m21.clone() * w.x + m22.clone() * w.y;
    debug_assert!(py.is_positive());
    let k = -px.div_floor(&py);
    let (r11, r12) = (m11 + k.clone() * m21.clone(), m12 + k * m22.clone());
    let tx = -(r11.clone() * vs[i].x.clone() + r12.clone() * vs[i].y.clone());
    let ty = -(m21.clone() * vs[i].x.clone() + m22.clone() * vs[i].y.clone());
    AffineUnimodularMap::new(r11, r12, m21, m22, tx, ty).expect("constructed with det ±1")
}

/// Canonical representative together with a map sending `polygon` onto it.
pub fn normal_form_with_map<T: Coord>(
    polygon: &LatticePolygon<T>,
) -> (LatticePolygon<T>, AffineUnimodularMap<T>) {
    let vs = polygon.vertices();
    match polygon.dimension() {
        Dimension::Empty => (LatticePolygon::empty(), AffineUnimodularMap::identity()),
        Dimension::Point => {
            let map = AffineUnimodularMap::translation(&LatticePoint::new(
                -vs[0].x.clone(),
                -vs[0].y.clone(),
            ));
            (map.apply(polygon), map)
        }
        Dimension::Segment => {
            let e = vs[1].sub(&vs[0]);
            let g = e.x.gcd(&e.y);
            let (ex, ey) = (e.x / g.clone(), e.y / g);
            let (_, s, t) = extended_gcd(&ex, &ey);
            let tx = -(s.clone() * vs[0].x.clone() + t.clone() * vs[0].y.clone());
            let ty = -(-ey.clone() * vs[0].x.clone() + ex.clone() * vs[0].y.clone());
            let map = AffineUnimodularMap::new(s, t, -ey, ex, tx, ty).expect("det 1");
            (map.apply(polygon), map)
        }
        Dimension::Full => {
            let n = vs.len();
            let mut best: Option<(Vec<LatticePoint<T>>, AffineUnimodularMap<T>)> = None;
            for i in 0..n {
                for forward in [true, false] {
                    let map = candidate_map(vs, i, forward);
                    let seq: Vec<_> = (0..n)
                        .map(|k| {
                            let idx = if forward {
                                (i + k) % n
                            } else {
                                (i + n - k) % n
                            };
                            map.apply_point(&vs[idx])
                        })
                        .collect();
                    if best.as_ref().is_none_or(|(b, _)| seq < *b) {
                        best = Some((seq, map));
                    }
                }
            }
            let (seq, map) = best.unwrap();
            (convex_hull(&seq), map)
        }
    }
}

/// Canonical representative of the affine unimodular class of `polygon`.
pub fn normal_form<T: Coord>(polygon: &LatticePolygon<T>) -> LatticePolygon<T> {
    normal_form_with_map(polygon).0
}

pub fn equivalent<T: Coord>(p: &LatticePolygon<T>, q: &LatticePolygon<T>) -> bool {
    if p.dimension() != q.dimension() || p.vertices().len() != q.vertices().len() {
        return false;
    }
    normal_form(p) == normal_form(q)
}

/// `dΣ = conv{(0,0), (d,0), (0,d)}`.
pub fn simplex<T: Coord>(d: i64) -> LatticePolygon<T> {
    LatticePolygon::from_i64_pairs(&[(0, 0), (d, 0), (0, d)])
}

/// Returns `d` when `polygon` is equivalent to `dΣ` for some `d >= 1`.
///
/// A triangle whose three edges all have lattice length `d` and whose doubled
/// area is `d²` is `d` times a unimodular triangle.
pub fn is_standard_simplex_multiple<T: Coord>(polygon: &LatticePolygon<T>) -> Option<T> {
    if polygon.vertices().len() != 3 {
        return None;
    }
    let lens = polygon.edge_lengths();
    let d = lens[0].clone();
    if lens.iter().any(|l| *l != d) {
        return None;
    }
    (polygon.area_twice() == d.clone() * d.clone()).then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: &[(i64, i64)]) -> LatticePolygon<i64> {
        LatticePolygon::from_i64_pairs(p)
    }

    #[test]
    fn unit_triangles_share_a_class() {
        let a = poly(&[(0, 0), (1, 0), (0, 1)]);
        let b = poly(&[(4, 4), (5, 4), (5, 5)]);
        assert_eq!(normal_form(&a), normal_form(&b));
        assert!(equivalent(&a, &b));
        assert!(!equivalent(&a, &simplex(2)));
    }

    #[test]
    fn map_reaches_normal_form() {
        let p = poly(&[(3, -2), (9, 1), (4, 7), (-1, 3)]);
        let (nf, map) = normal_form_with_map(&p);
        assert_eq!(map.apply(&p), nf);
        assert_eq!(normal_form(&nf), nf);
    }

    #[test]
    fn segments_and_points() {
        let s = poly(&[(3, 1), (9, 5)]);
        assert_eq!(normal_form(&s), poly(&[(0, 0), (2, 0)]));
        assert_eq!(normal_form(&poly(&[(-7, 2)])), poly(&[(0, 0)]));
        assert!(normal_form(&LatticePolygon::<i64>::empty()).is_empty());
    }

    #[test]
    fn mirror_images_are_equivalent() {
        let p = poly(&[(0, 0), (3, 0), (1, 2)]);
        let q = poly(&[(0, 0), (-3, 0), (-1, 2)]);
        assert!(equivalent(&p, &q));
    }

    #[test]
    fn simplex_multiples() {
        assert_eq!(is_standard_simplex_multiple(&simplex::<i64>(5)), Some(5));
        assert_eq!(
            is_standard_simplex_multiple(&poly(&[(1, 1), (3, 1), (1, 3)])),
            Some(2)
        );
        assert_eq!(
            is_standard_simplex_multiple(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])),
            None
        );
        // equal edge lengths but not unimodular: conv{(-1,-1),(1,0),(0,1)}
        assert_eq!(
            is_standard_simplex_multiple(&poly(&[(-1, -1), (1, 0), (0, 1)])),
            None
        );
        let shear = AffineUnimodularMap::from_i64([[2, 1], [1, 1]], [5, -3]).unwrap();
        assert_eq!(
            is_standard_simplex_multiple(&shear.apply(&simplex::<i64>(4))),
            Some(4)
        );
    }
}
