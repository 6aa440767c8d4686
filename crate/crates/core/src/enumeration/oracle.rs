//! Brute-force reference enumerators.
//!
//! Everything here works on explicit point sets inside a bounding box and
//! shares nothing with the optimized enumerator beyond hulls, point counts
//! and normal forms. Used to cross-check the optimized paths at small scale.

use std::collections::{BTreeSet, HashSet};

use crate::lattice::{convex_hull, normal_form, LatticePoint, LatticePolygon};
use crate::scalar::Coord;

fn box_points<T: Coord>(x0: &T, x1: &T, y0: &T, y1: &T) -> Vec<LatticePoint<T>> {
    let mut out = Vec::new();
    let mut x = x0.clone();
    while x <= *x1 {
        let mut y = y0.clone();
        while y <= *y1 {
            out.push(LatticePoint::new(x.clone(), y.clone()));
            y = y + T::one();
        }
        x = x + T::one();
    }
    out
}

/// Normal forms of all polygons with exactly `n` lattice points whose
/// vertices fit in `[0, side]²`, found as hulls of every point subset of
/// size at most `n` (a polygon with `n` lattice points has at most `n`
/// vertices). Subsets are anchored on the column `x = 0`.
pub fn naive_by_lattice_points(n: usize, side: i64) -> BTreeSet<LatticePolygon<i64>> {
    let pts = box_points(&0i64, &side, &0, &side);
    let mut found = BTreeSet::new();
    let mut chosen: Vec<LatticePoint<i64>> = Vec::with_capacity(n);

    fn rec(
        pts: &[LatticePoint<i64>],
        start: usize,
        n: usize,
        chosen: &mut Vec<LatticePoint<i64>>,
        found: &mut BTreeSet<LatticePolygon<i64>>,
    ) {
        if !chosen.is_empty() {
            let hull = convex_hull(chosen);
            if hull.count_lattice_points() as usize == n {
                found.insert(normal_form(&hull));
            }
        }
        if chosen.len() == n {
            return;
        }
        for i in start..pts.len() {
            if chosen.is_empty() && pts[i].x != 0 {
                break;
            }
            chosen.push(pts[i].clone());
            rec(pts, i + 1, n, chosen, found);
            chosen.pop();
        }
    }

    rec(&pts, 0, n, &mut chosen, &mut found);
    found
}

/// Normal forms of all full-dimensional polygons with exactly `g` interior
/// lattice points inside `[0, side]²`.
///
/// Grows polygons one box point at a time from a single point on the column
/// `x = 0`. Interior counts never decrease when points are added, so pruning
/// states with more than `g` interior points loses nothing.
pub fn naive_by_interior_points(g: usize, side: i64) -> BTreeSet<LatticePolygon<i64>> {
    let pts = box_points(&0i64, &side, &0, &side);
    let mut seen: HashSet<LatticePolygon<i64>> = HashSet::new();
    let mut stack: Vec<LatticePolygon<i64>> = Vec::new();
    for y in 0..=side {
        let p = LatticePolygon::from_i64_pairs(&[(0, y)]);
        seen.insert(p.clone());
        stack.push(p);
    }
    let mut found = BTreeSet::new();
    while let Some(q) = stack.pop() {
        if q.is_full() && q.count_interior_points() as usize == g {
            found.insert(normal_form(&q));
        }
        for z in pts.iter() {
            if q.contains(z) {
                continue;
            }
            let mut vs = q.vertices().to_vec();
            vs.push(z.clone());
            let next = convex_hull(&vs);
            if next.count_interior_points() as usize > g || seen.contains(&next) {
                continue;
            }
            seen.insert(next.clone());
            stack.push(next);
        }
    }
    found
}

/// Search for a lattice polygon whose interior lattice points are exactly
/// those of `target`, among polygons containing `target` with vertices in
/// its bounding box widened by `margin` and at most `max_points` lattice
/// points. Returns the first witness found.
pub fn search_interior_witness<T: Coord>(
    target: &LatticePolygon<T>,
    margin: i64,
    max_points: usize,
) -> Option<LatticePolygon<T>> {
    if target.is_empty() {
        return None;
    }
    let wanted: HashSet<LatticePoint<T>> = target.lattice_points().into_iter().collect();
    let vs = target.vertices();
    let m = T::of(margin);
    let x0 = vs.iter().map(|v| &v.x).min().unwrap().clone() - m.clone();
    let x1 = vs.iter().map(|v| &v.x).max().unwrap().clone() + m.clone();
    let y0 = vs.iter().map(|v| &v.y).min().unwrap().clone() - m.clone();
    let y1 = vs.iter().map(|v| &v.y).max().unwrap().clone() + m;
    let pts = box_points(&x0, &x1, &y0, &y1);

    let admissible = |q: &LatticePolygon<T>| -> Option<bool> {
        if q.count_lattice_points()
            .to_usize()
            .is_none_or(|c| c > max_points)
        {
            return None;
        }
        let inner = q.interior_lattice_points();
        if !inner.iter().all(|p| wanted.contains(p)) {
            return None;
        }
        Some(inner.len() == wanted.len())
    };

    let start = target.clone();
    let mut seen: HashSet<LatticePolygon<T>> = HashSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(q) = stack.pop() {
        for z in pts.iter() {
            if q.contains(z) {
                continue;
            }
            let mut vs = q.vertices().to_vec();
            vs.push(z.clone());
            let next = convex_hull(&vs);
            if seen.contains(&next) {
                continue;
            }
            match admissible(&next) {
                None => {}
                Some(true) => return Some(next),
                Some(false) => {
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_point_counts() {
        assert_eq!(naive_by_lattice_points(1, 3).len(), 1);
        assert_eq!(naive_by_lattice_points(2, 3).len(), 1);
        assert_eq!(naive_by_lattice_points(3, 5).len(), 2);
    }

    #[test]
    fn witness_for_point_and_segment() {
        let pt = LatticePolygon::<i64>::from_i64_pairs(&[(0, 0)]);
        let w = search_interior_witness(&pt, 3, 40).unwrap();
        assert_eq!(w.interior_lattice_points(), pt.lattice_points());
        let seg = LatticePolygon::<i64>::from_i64_pairs(&[(0, 0), (9, 0)]);
        let w = search_interior_witness(&seg, 3, 60).unwrap();
        assert_eq!(w.interior_lattice_points(), seg.lattice_points());
    }
}
