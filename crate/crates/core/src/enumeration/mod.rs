//! Exhaustive enumeration of lattice polygons up to affine unimodular
//! equivalence.
//!
//! Two entry points:
//!
//! * by total lattice point count `n`: every polygon with `n` points is a
//!   polygon with `n - 1` points plus one point of its relaxed region, so
//!   classes are grown level by level from the single point;
//! * by interior point count `g`: every polygon `Δ` with `g` interior points
//!   has an interior polygon `P` with `g` lattice points. For
//!   full-dimensional `P`, `Δ` lies inside the relaxation of `P` and is
//!   reached from it by repeatedly dropping a vertex; for a point or a
//!   segment, `Δ` has lattice width 2 in the direction normal to `P` (or is
//!   `3Σ`) and is found by a bounded search over three-row polygons.
//!
//! Output order is deterministic: classes are sorted by point count and then
//! by their normal form, regardless of the number of worker threads.

mod oracle;
mod relaxation;

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::EnumerationError;
use crate::json;
use crate::lattice::{
    convex_hull, lattice_width, normal_form, simplex, Dimension, LatticePoint, LatticePolygon,
};
use crate::scalar::Coord;

pub use oracle::{naive_by_interior_points, naive_by_lattice_points, search_interior_witness};
pub use relaxation::{realizable_as_interior, relaxation, RelaxationResult};

/// Largest interior point count the enumerator accepts.
pub const MAX_INTERIOR: i64 = 12;

/// Largest total point count accepted by [`Enumerator::by_lattice_points`].
pub const MAX_POINTS: i64 = 16;

/// An equivalence class, carried by its normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolygonClass<T> {
    pub n_points: T,
    pub representative: LatticePolygon<T>,
    pub n_interior: T,
    pub lw: T,
}

impl<T: Coord> PolygonClass<T> {
    pub fn of(polygon: &LatticePolygon<T>) -> Self {
        let representative = normal_form(polygon);
        Self {
            n_points: representative.count_lattice_points(),
            n_interior: representative.count_interior_points(),
            lw: lattice_width(&representative).width,
            representative,
        }
    }

    /// `{vertices, n_points, n_interior, lw}`.
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": json::vertices(&self.representative),
            "n_points": json::int(&self.n_points),
            "n_interior": json::int(&self.n_interior),
            "lw": json::int(&self.lw),
        })
    }
}

/// Enumeration settings.
#[derive(Clone, Debug)]
pub struct Enumerator {
    threads: usize,
    max_states: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            threads: 0,
            max_states: 20_000_000,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Worker threads; `0` lets the pool decide.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    /// Cap on polygons visited while shrinking a single maximal polygon.
    /// Exceeding it is an error, never a silent truncation.
    pub fn max_states(mut self, max_states: usize) -> Self {
        self.max_states = max_states;
        self
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool");
        pool.install(job)
    }

    /// All classes (points and segments included) with exactly `n` lattice
    /// points.
    pub fn by_lattice_points<T: Coord>(
        &self,
        n: i64,
    ) -> Result<Vec<PolygonClass<T>>, EnumerationError> {
        check_range("n", n, 1, MAX_POINTS)?;
        let reps = self.run(|| self.point_levels::<T>(n as usize));
        Ok(sorted_classes(reps))
    }

    /// Normal forms with exactly `n` lattice points, level by level.
    fn point_levels<T: Coord>(&self, n: usize) -> BTreeSet<LatticePolygon<T>> {
        let mut level: BTreeSet<LatticePolygon<T>> = BTreeSet::new();
        level.insert(LatticePolygon::from_i64_pairs(&[(0, 0)]));
        for size in 2..=n {
            let parents: Vec<_> = level.into_iter().collect();
            level = parents
                .par_iter()
                .flat_map_iter(|p| grow_by_one(p, size))
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
        }
        level
    }

    /// All classes of full-dimensional polygons with exactly `g` interior
    /// lattice points.
    pub fn by_interior_points<T: Coord>(
        &self,
        g: i64,
    ) -> Result<Vec<PolygonClass<T>>, EnumerationError> {
        check_range("g", g, 1, MAX_INTERIOR)?;
        let found = self.run(
            || -> Result<BTreeSet<LatticePolygon<T>>, EnumerationError> {
                let candidates: Vec<_> = self.point_levels::<T>(g as usize).into_iter().collect();
                let parts = candidates
                    .par_iter()
                    .map(|p| self.polygons_with_interior(p, g))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(parts.into_iter().flatten().collect())
            },
        )?;
        Ok(sorted_classes(found))
    }

    /// Distinct interior polygons over all `Δ` with `g` interior points.
    pub fn interior_classes<T: Coord>(
        &self,
        g: i64,
    ) -> Result<Vec<PolygonClass<T>>, EnumerationError> {
        let all = self.by_interior_points::<T>(g)?;
        let inner: BTreeSet<_> = all
            .iter()
            .map(|c| normal_form(&c.representative.interior_polygon()))
            .collect();
        Ok(sorted_classes(inner))
    }

    /// Normal forms of every `Δ` whose interior polygon is exactly `inner`.
    fn polygons_with_interior<T: Coord>(
        &self,
        inner: &LatticePolygon<T>,
        g: i64,
    ) -> Result<Vec<LatticePolygon<T>>, EnumerationError> {
        let roots = match inner.dimension() {
            Dimension::Full => match relaxation(inner)?.relaxed {
                Some(max) => vec![max],
                None => return Ok(Vec::new()),
            },
            Dimension::Point | Dimension::Segment => {
                let mut roots = three_row_polygons::<T>(g);
                if g == 1 {
                    roots.push(simplex::<T>(3).translate(&LatticePoint::from_i64(-1, -1)));
                }
                roots
            }
            Dimension::Empty => return Ok(Vec::new()),
        };
        let target = T::of(g);
        let mut seen: HashSet<LatticePolygon<T>> = HashSet::new();
        let mut stack: Vec<LatticePolygon<T>> = Vec::new();
        for r in roots {
            if r.count_interior_points() == target && seen.insert(r.clone()) {
                stack.push(r);
            }
        }
        let mut out = BTreeSet::new();
        while let Some(delta) = stack.pop() {
            out.insert(normal_form(&delta));
            let pts = delta.lattice_points();
            for v in delta.vertices() {
                let rest: Vec<_> = pts.iter().filter(|p| *p != v).cloned().collect();
                let smaller = convex_hull(&rest);
                if !smaller.is_full() || smaller.count_interior_points() != target {
                    continue;
                }
                if seen.insert(smaller.clone()) {
                    if seen.len() > self.max_states {
                        return Err(EnumerationError::ResourceLimit(format!(
                            "more than {} sub-polygons below interior polygon {}",
                            self.max_states, inner
                        )));
                    }
                    stack.push(smaller);
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}

fn check_range(what: &'static str, value: i64, min: i64, max: i64) -> Result<(), EnumerationError> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(EnumerationError::UnsupportedRange {
            what,
            value,
            min,
            max,
        })
    }
}

fn sorted_classes<T: Coord>(
    reps: impl IntoIterator<Item = LatticePolygon<T>>,
) -> Vec<PolygonClass<T>> {
    let mut classes: Vec<_> = reps.into_iter().map(|p| PolygonClass::of(&p)).collect();
    classes.sort();
    classes
}

/// Normal forms of the polygons with `size` lattice points obtained by adding
/// one lattice point to `polygon` (which has `size - 1`).
///
/// An added point `v` must see every visible edge from lattice distance one,
/// otherwise the triangle it spans with that edge holds another lattice
/// point. For full-dimensional polygons that is the relaxed region; a
/// segment can only be extended along its line or capped by a point at
/// height one, and all such caps are equivalent by shearing.
fn grow_by_one<T: Coord>(polygon: &LatticePolygon<T>, size: usize) -> Vec<LatticePolygon<T>> {
    let candidates: Vec<LatticePoint<T>> = match polygon.dimension() {
        Dimension::Empty => vec![LatticePoint::origin()],
        Dimension::Point => {
            let p = &polygon.vertices()[0];
            vec![p.add(&LatticePoint::from_i64(1, 0))]
        }
        Dimension::Segment => {
            // normal form puts the segment on the x-axis starting at 0
            let nf = normal_form(polygon);
            let len = nf.vertices()[1].x.clone();
            return [
                LatticePoint::new(len + T::one(), T::zero()),
                LatticePoint::from_i64(0, 1),
            ]
            .into_iter()
            .map(|v| {
                let mut vs = nf.vertices().to_vec();
                vs.push(v);
                normal_form(&convex_hull(&vs))
            })
            .collect();
        }
        Dimension::Full => relaxation::relaxed_lattice_points(polygon),
    };
    let want = T::from_usize(size).expect("size fits");
    let mut out = Vec::new();
    for v in candidates {
        if polygon.contains(&v) {
            continue;
        }
        let mut vs = polygon.vertices().to_vec();
        vs.push(v);
        let hull = convex_hull(&vs);
        if hull.count_lattice_points() == want {
            out.push(normal_form(&hull));
        }
    }
    out
}

/// Every full-dimensional polygon in the strip `-1 <= y <= 1` whose interior
/// lattice points are exactly `(0,0), ..., (g-1,0)`, up to shears fixing the
/// x-axis (the top row is shifted to start at `x = 0`).
///
/// Such a polygon is the hull of its three rows `[a1,b1]×{1}`,
/// `[a2,b2]×{-1}` and `[c1,c2]×{0}`, with `c1 ∈ {-1,0}` and
/// `c2 ∈ {g-1,g}`. The middle row contains the midpoints of the outer rows,
/// so `a2 >= -2` and `b1 + b2 <= 2g`.
fn three_row_polygons<T: Coord>(g: i64) -> Vec<LatticePolygon<T>> {
    let target: Vec<LatticePoint<T>> = (0..g).map(|x| LatticePoint::from_i64(x, 0)).collect();
    let mut out = Vec::new();
    for b1 in 0..=(2 * g + 2) {
        for a2 in -2..=(2 * g - b1) {
            for b2 in a2..=(2 * g - b1) {
                for c1 in [-1, 0] {
                    for c2 in [g - 1, g] {
                        let poly = LatticePolygon::from_i64_pairs(&[
                            (0, 1),
                            (b1, 1),
                            (a2, -1),
                            (b2, -1),
                            (c1, 0),
                            (c2, 0),
                        ]);
                        if poly.is_full() && poly.interior_lattice_points() == target {
                            out.push(poly);
                        }
                    }
                }
            }
        }
    }
    out
}

/// [`Enumerator::by_lattice_points`] with default settings.
pub fn enumerate_by_lattice_points<T: Coord>(
    n: i64,
) -> Result<Vec<PolygonClass<T>>, EnumerationError> {
    Enumerator::new().by_lattice_points(n)
}

/// [`Enumerator::by_interior_points`] with default settings.
pub fn enumerate_by_interior_points<T: Coord>(
    g: i64,
) -> Result<Vec<PolygonClass<T>>, EnumerationError> {
    Enumerator::new().by_interior_points(g)
}

/// [`Enumerator::interior_classes`] with default settings.
pub fn interior_classes<T: Coord>(g: i64) -> Result<Vec<PolygonClass<T>>, EnumerationError> {
    Enumerator::new().interior_classes(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::equivalent;

    #[test]
    fn small_point_counts() {
        assert_eq!(enumerate_by_lattice_points::<i64>(1).unwrap().len(), 1);
        assert_eq!(enumerate_by_lattice_points::<i64>(2).unwrap().len(), 1);
        let three = enumerate_by_lattice_points::<i64>(3).unwrap();
        assert_eq!(three.len(), 2);
        assert!(three
            .iter()
            .any(|c| equivalent(&c.representative, &simplex(1))));
    }

    #[test]
    fn range_errors() {
        assert!(matches!(
            enumerate_by_interior_points::<i64>(13),
            Err(EnumerationError::UnsupportedRange {
                what: "g",
                value: 13,
                ..
            })
        ));
        assert!(enumerate_by_interior_points::<i64>(0).is_err());
        assert!(enumerate_by_lattice_points::<i64>(0).is_err());
    }

    #[test]
    fn one_interior_point_gives_sixteen() {
        // the sixteen reflexive polygons
        assert_eq!(enumerate_by_interior_points::<i64>(1).unwrap().len(), 16);
    }

    #[test]
    fn three_row_search_matches_definition() {
        for g in 1..=4 {
            for p in three_row_polygons::<i64>(g) {
                assert_eq!(p.count_interior_points(), g);
                assert_eq!(lattice_width(&p).width, 2);
            }
        }
    }

    #[test]
    fn classes_are_normal_forms() {
        for c in enumerate_by_interior_points::<i64>(2).unwrap() {
            assert_eq!(normal_form(&c.representative), c.representative);
            assert_eq!(c.n_interior, 2);
        }
    }

    #[test]
    fn genus_six_interiors_include_two_simplex() {
        let classes = interior_classes::<i64>(6).unwrap();
        assert!(classes
            .iter()
            .any(|c| equivalent(&c.representative, &simplex(2))));
    }

    #[test]
    fn resource_limit_is_loud() {
        let err = Enumerator::new().max_states(3).by_interior_points::<i64>(4);
        assert!(matches!(err, Err(EnumerationError::ResourceLimit(_))));
    }
}
