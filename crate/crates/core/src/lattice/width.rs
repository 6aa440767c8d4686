use crate::error::GeometryError;
use crate::lattice::point::{LatticePoint, PrimitiveVector};
use crate::lattice::polygon::{Dimension, LatticePolygon};
use crate::scalar::Coord;

/// Lattice width together with a direction attaining it.
///
/// `width` is `-1` for the empty polygon, which has no direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WidthCertificate<T> {
    pub width: T,
    pub direction: Option<PrimitiveVector<T>>,
}

/// `max(u·v) - min(u·v)` over the vertices.
pub fn width_along<T: Coord>(
    polygon: &LatticePolygon<T>,
    u: &PrimitiveVector<T>,
) -> Result<T, GeometryError> {
    let mut values = polygon.vertices().iter().map(|v| u.eval(v));
    let first = values.next().ok_or(GeometryError::Empty)?;
    let (lo, hi) = values.fold((first.clone(), first), |(lo, hi), x| {
        if x < lo {
            (x, hi)
        } else if x > hi {
            (lo, x)
        } else {
            (lo, hi)
        }
    });
    Ok(hi - lo)
}

/// Exact lattice width.
///
/// Any direction `u` with `width(u) <= w0` satisfies `|u·d1| <= w0` and
/// `|u·d2| <= w0` for two independent edge vectors `d1, d2` at a common
/// vertex; inverting that 2×2 system bounds `|a|` and `|b|`, so the scan
/// below is a complete search. `w0` is the best of four cheap directions.
pub fn lattice_width<T: Coord>(polygon: &LatticePolygon<T>) -> WidthCertificate<T> {
    match polygon.dimension() {
        Dimension::Empty => {
            return WidthCertificate {
                width: -T::one(),
                direction: None,
            }
        }
        Dimension::Point => {
            return WidthCertificate {
                width: T::zero(),
                direction: Some(PrimitiveVector::new_unchecked(T::one(), T::zero())),
            }
        }
        Dimension::Segment => {
            let d = polygon.vertices()[1].sub(&polygon.vertices()[0]);
            // The functional orthogonal to the segment vanishes along it.
            let g = d.x.gcd(&d.y);
            let normal = PrimitiveVector::new_unchecked(-(d.y / g.clone()), d.x / g);
            return WidthCertificate {
                width: T::zero(),
                direction: Some(normal),
            };
        }
        Dimension::Full => {}
    }

    let seeds = [(1, 0), (0, 1), (1, 1), (1, -1)];
    let mut best: Option<(T, PrimitiveVector<T>)> = None;
    for (a, b) in seeds {
        let u = PrimitiveVector::new_unchecked(T::of(a), T::of(b));
        let w = width_along(polygon, &u).expect("nonempty");
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, u));
        }
    }
    let (w0, _) = best.clone().unwrap();
    let (amax, bmax) = search_box(polygon, &w0);

    let mut a = T::zero();
    while a <= amax {
        let mut b = if a.is_zero() { T::one() } else { -bmax.clone() };
        while b <= bmax {
            if a.gcd(&b).is_one() {
                let u = PrimitiveVector::new_unchecked(a.clone(), b.clone());
                let w = width_along(polygon, &u).expect("nonempty");
                let (bw, bu) = best.as_ref().unwrap();
                if w < *bw || (w == *bw && u < *bu) {
                    best = Some((w, u));
                }
            }
            b = b + T::one();
        }
        a = a + T::one();
    }
    let (width, u) = best.unwrap();
    WidthCertificate {
        width,
        direction: Some(u),
    }
}

/// Smallest `(A, B)` over all vertices such that every direction of width at
/// most `w0` has `|a| <= A`, `|b| <= B`.
fn search_box<T: Coord>(polygon: &LatticePolygon<T>, w0: &T) -> (T, T) {
    let vs = polygon.vertices();
    let n = vs.len();
    let mut best: Option<(T, T)> = None;
    for i in 0..n {
        let d1: LatticePoint<T> = vs[(i + 1) % n].sub(&vs[i]);
        let d2: LatticePoint<T> = vs[(i + n - 1) % n].sub(&vs[i]);
        let det = d1.cross(&d2).abs();
        // a = (s·d2.y - t·d1.y)/det, b = (t·d1.x - s·d2.x)/det with |s|,|t| <= w0
        let amax = (w0.clone() * (d1.y.abs() + d2.y.abs())).div_floor(&det);
        let bmax = (w0.clone() * (d1.x.abs() + d2.x.abs())).div_floor(&det);
        let size = (amax.clone() + T::one()) * (bmax.clone() + T::one());
        let better = match &best {
            None => true,
            Some((a, b)) => size < (a.clone() + T::one()) * (b.clone() + T::one()),
        };
        if better {
            best = Some((amax, bmax));
        }
    }
    best.expect("full-dimensional polygon has vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: &[(i64, i64)]) -> LatticePolygon<i64> {
        LatticePolygon::from_i64_pairs(p)
    }

    fn brute_width(p: &LatticePolygon<i64>, bound: i64) -> i64 {
        let mut best = i64::MAX;
        for a in -bound..=bound {
            for b in -bound..=bound {
                if let Ok(u) = PrimitiveVector::new(a, b) {
                    best = best.min(width_along(p, &u).unwrap());
                }
            }
        }
        best
    }

    #[test]
    fn width_along_examples() {
        let five = poly(&[(0, 0), (5, 0), (0, 5)]);
        let e1 = PrimitiveVector::new(1, 0).unwrap();
        let diag = PrimitiveVector::new(1, 1).unwrap();
        assert_eq!(width_along(&five, &e1).unwrap(), 5);
        assert_eq!(width_along(&five, &diag).unwrap(), 5);
        assert_eq!(width_along(&poly(&[(7, -3)]), &diag).unwrap(), 0);
        assert_eq!(
            width_along(&LatticePolygon::<i64>::empty(), &diag),
            Err(GeometryError::Empty)
        );
    }

    #[test]
    fn lattice_width_examples() {
        assert_eq!(lattice_width(&poly(&[(0, 0), (1, 0), (0, 1)])).width, 1);
        let five = poly(&[(0, 0), (5, 0), (0, 5)]);
        assert_eq!(brute_width(&five, 5), 5);
        assert_eq!(lattice_width(&five).width, 5);
        let inner = poly(&[(1, 1), (3, 1), (1, 3)]);
        assert_eq!(brute_width(&inner, 5), 2);
        assert_eq!(lattice_width(&inner).width, 2);
    }

    #[test]
    fn degenerate_widths() {
        let e = lattice_width(&LatticePolygon::<i64>::empty());
        assert_eq!(e.width, -1);
        assert!(e.direction.is_none());
        assert_eq!(lattice_width(&poly(&[(4, 4)])).width, 0);
        let seg = poly(&[(0, 0), (6, 4)]);
        let c = lattice_width(&seg);
        assert_eq!(c.width, 0);
        assert_eq!(width_along(&seg, c.direction.as_ref().unwrap()).unwrap(), 0);
    }

    #[test]
    fn thin_sheared_triangle() {
        // Unimodular image of a width-1 triangle with large coordinates.
        let p = poly(&[(0, 0), (1, 0), (17, 16)]);
        let c = lattice_width(&p);
        assert_eq!(c.width, 1);
        assert_eq!(width_along(&p, c.direction.as_ref().unwrap()).unwrap(), 1);
    }
}
