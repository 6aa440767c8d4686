use std::fmt;

use crate::error::GeometryError;
use crate::lattice::point::LatticePoint;
use crate::scalar::Coord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    Empty,
    Point,
    Segment,
    Full,
}

impl Dimension {
    pub fn as_str(self) -> &'static str {
        match self {
            Dimension::Empty => "empty",
            Dimension::Point => "point",
            Dimension::Segment => "segment",
            Dimension::Full => "full",
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Convex hull of finitely many lattice points.
///
/// The vertex list is the unique minimal description of the hull: strictly
/// convex, counterclockwise, starting at the lexicographically smallest
/// vertex. A segment stores its two endpoints in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePolygon<T> {
    vertices: Vec<LatticePoint<T>>,
}

/// Andrew's monotone chain, dropping collinear boundary points.
pub fn convex_hull<T: Coord>(points: &[LatticePoint<T>]) -> LatticePolygon<T> {
    let mut pts: Vec<LatticePoint<T>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return LatticePolygon { vertices: pts };
    }
    let mut hull: Vec<LatticePoint<T>> = Vec::with_capacity(pts.len() + 1);
    for p in pts.iter() {
        while hull.len() >= 2
            && !LatticePoint::orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive()
        {
            hull.pop();
        }
        hull.push(p.clone());
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && !LatticePoint::orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive()
        {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull.pop();
    LatticePolygon { vertices: hull }
}

impl<T: Coord> LatticePolygon<T> {
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
        }
    }

    /// Hull of the given points; the input need not be ordered or convex.
    pub fn from_points(points: &[LatticePoint<T>]) -> Self {
        convex_hull(points)
    }

    pub fn from_i64_pairs(pairs: &[(i64, i64)]) -> Self {
        let pts: Vec<_> = pairs
            .iter()
            .map(|&(x, y)| LatticePoint::from_i64(x, y))
            .collect();
        convex_hull(&pts)
    }

    pub fn vertices(&self) -> &[LatticePoint<T>] {
        &self.vertices
    }

    pub fn dimension(&self) -> Dimension {
        match self.vertices.len() {
            0 => Dimension::Empty,
            1 => Dimension::Point,
            2 => Dimension::Segment,
            _ => Dimension::Full,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.vertices.len() >= 3
    }

    pub(crate) fn require_full(&self) -> Result<(), GeometryError> {
        if self.is_full() {
            Ok(())
        } else {
            Err(GeometryError::Degenerate {
                dimension: self.dimension().as_str(),
            })
        }
    }

    /// Directed boundary edges, counterclockwise.
    pub fn edges(&self) -> impl Iterator<Item = (&LatticePoint<T>, &LatticePoint<T>)> + '_ {
        let n = self.vertices.len();
        let count = if n >= 3 { n } else { 0 };
        (0..count).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn translate(&self, by: &LatticePoint<T>) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
        }
    }

    pub fn cast<U: Coord>(&self) -> LatticePolygon<U> {
        LatticePolygon {
            vertices: self.vertices.iter().map(|v| v.cast()).collect(),
        }
    }

    /// Twice the Euclidean area (shoelace); zero below full dimension.
    pub fn area_twice(&self) -> T {
        let mut acc = T::zero();
        for (p, q) in self.edges() {
            acc = acc + p.cross(q);
        }
        acc
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_count(&self) -> T {
        match self.dimension() {
            Dimension::Empty => T::zero(),
            Dimension::Point => T::one(),
            Dimension::Segment => {
                let d = self.vertices[1].sub(&self.vertices[0]);
                d.x.gcd(&d.y) + T::one()
            }
            Dimension::Full => self.edges().fold(T::zero(), |acc, (p, q)| {
                let d = q.sub(p);
                acc + d.x.gcd(&d.y)
            }),
        }
    }

    /// For each row `y` meeting the polygon, the closed range `[lo, hi]` of
    /// integer `x` inside it (or strictly inside it when `strict`).
    /// Full-dimensional polygons only.
    fn row_ranges(&self, strict: bool) -> Vec<(T, T, T)> {
        debug_assert!(self.is_full());
        let ymin = self.vertices.iter().map(|v| &v.y).min().unwrap().clone();
        let ymax = self.vertices.iter().map(|v| &v.y).max().unwrap().clone();
        let mut rows = Vec::new();
        let mut y = ymin;
        while y <= ymax {
            if let Some((lo, hi)) = self.row_range(&y, strict) {
                rows.push((y.clone(), lo, hi));
            }
            y = y + T::one();
        }
        rows
    }

    fn row_range(&self, y: &T, strict: bool) -> Option<(T, T)> {
        let mut lo: Option<T> = None;
        let mut hi: Option<T> = None;
        for (p, q) in self.edges() {
            let dx = q.x.clone() - p.x.clone();
            let dy = q.y.clone() - p.y.clone();
            // inside: dy * (x - px) <= dx * (y - py), strictly for interior
            let mut rhs = dx * (y.clone() - p.y.clone());
            if strict {
                rhs = rhs - T::one();
            }
            if dy.is_zero() {
                if rhs.is_negative() {
                    return None;
                }
            } else if dy.is_positive() {
                let bound = p.x.clone() + rhs.div_floor(&dy);
                hi = Some(match hi {
                    Some(h) if h < bound => h,
                    _ => bound,
                });
            } else {
                let bound = p.x.clone() + rhs.ceil_div(&dy);
                lo = Some(match lo {
                    Some(l) if l > bound => l,
                    _ => bound,
                });
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) if l <= h => Some((l, h)),
            _ => None,
        }
    }

    /// All lattice points, boundary included, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<LatticePoint<T>> {
        let mut out = match self.dimension() {
            Dimension::Empty => Vec::new(),
            Dimension::Point => self.vertices.clone(),
            Dimension::Segment => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                let d = b.sub(a);
                let g = d.x.gcd(&d.y);
                let step = LatticePoint::new(d.x / g.clone(), d.y / g.clone());
                let mut pts = Vec::new();
                let mut cur = a.clone();
                let mut k = T::zero();
                while k <= g {
                    pts.push(cur.clone());
                    cur = cur.add(&step);
                    k = k + T::one();
                }
                pts
            }
            Dimension::Full => Self::expand_rows(self.row_ranges(false)),
        };
        out.sort();
        out
    }

    /// Lattice points in the topological interior, sorted lexicographically.
    /// Empty below full dimension.
    pub fn interior_lattice_points(&self) -> Vec<LatticePoint<T>> {
        if !self.is_full() {
            return Vec::new();
        }
        let mut out = Self::expand_rows(self.row_ranges(true));
        out.sort();
        out
    }

    fn expand_rows(rows: Vec<(T, T, T)>) -> Vec<LatticePoint<T>> {
        let mut pts = Vec::new();
        for (y, lo, hi) in rows {
            let mut x = lo;
            while x <= hi {
                pts.push(LatticePoint::new(x.clone(), y.clone()));
                x = x + T::one();
            }
        }
        pts
    }

    fn count_rows(rows: &[(T, T, T)]) -> T {
        rows.iter().fold(T::zero(), |acc, (_, lo, hi)| {
            acc + hi.clone() - lo.clone() + T::one()
        })
    }

    /// `|lattice_points()|` without materializing the points.
    pub fn count_lattice_points(&self) -> T {
        match self.dimension() {
            Dimension::Full => Self::count_rows(&self.row_ranges(false)),
            _ => self.boundary_count(),
        }
    }

    /// `|interior_lattice_points()|` without materializing the points.
    pub fn count_interior_points(&self) -> T {
        if !self.is_full() {
            return T::zero();
        }
        Self::count_rows(&self.row_ranges(true))
    }

    /// Convex hull of the strictly interior lattice points.
    pub fn interior_polygon(&self) -> Self {
        if !self.is_full() {
            return Self::empty();
        }
        let mut ends = Vec::new();
        for (y, lo, hi) in self.row_ranges(true) {
            ends.push(LatticePoint::new(lo, y.clone()));
            ends.push(LatticePoint::new(hi, y));
        }
        convex_hull(&ends)
    }

    /// `E + 2I - 2` from point counts; equals [`Self::area_twice`] by Pick.
    pub fn pick_area_twice(&self) -> Result<T, GeometryError> {
        self.require_full()?;
        let total = self.count_lattice_points();
        let interior = self.count_interior_points();
        let boundary = total - interior.clone();
        Ok(boundary + interior.clone() + interior - T::of(2))
    }

    /// Closed containment test.
    pub fn contains(&self, p: &LatticePoint<T>) -> bool {
        match self.dimension() {
            Dimension::Empty => false,
            Dimension::Point => &self.vertices[0] == p,
            Dimension::Segment => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                LatticePoint::orient(a, b, p).is_zero()
                    && p.sub(a).dot(&b.sub(a)) >= T::zero()
                    && p.sub(b).dot(&a.sub(b)) >= T::zero()
            }
            Dimension::Full => self
                .edges()
                .all(|(a, b)| !LatticePoint::orient(a, b, p).is_negative()),
        }
    }

    /// Lattice length of each edge, i.e. the number of lattice steps along it.
    pub fn edge_lengths(&self) -> Vec<T> {
        self.edges()
            .map(|(p, q)| {
                let d = q.sub(p);
                d.x.gcd(&d.y)
            })
            .collect()
    }

    /// Whitespace-separated `x,y` vertex list, the inverse of
    /// [`crate::lattice::parse_polygon_text`].
    pub fn to_text(&self) -> String {
        self.vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<T: Coord> fmt::Display for LatticePolygon<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("(empty)");
        }
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: &[(i64, i64)]) -> LatticePolygon<i64> {
        LatticePolygon::from_i64_pairs(p)
    }

    fn pts(p: &[(i64, i64)]) -> Vec<LatticePoint<i64>> {
        p.iter()
            .map(|&(x, y)| LatticePoint::from_i64(x, y))
            .collect()
    }

    /// Reference point scan over the bounding box.
    fn grid_scan(p: &LatticePolygon<i64>, strict: bool) -> Vec<LatticePoint<i64>> {
        let vs = p.vertices();
        let (x0, x1) = (
            vs.iter().map(|v| v.x).min().unwrap(),
            vs.iter().map(|v| v.x).max().unwrap(),
        );
        let (y0, y1) = (
            vs.iter().map(|v| v.y).min().unwrap(),
            vs.iter().map(|v| v.y).max().unwrap(),
        );
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let z = LatticePoint::from_i64(x, y);
                let ok = p.edges().all(|(a, b)| {
                    let o = LatticePoint::orient(a, b, &z);
                    if strict {
                        o > 0
                    } else {
                        o >= 0
                    }
                });
                if ok {
                    out.push(z);
                }
            }
        }
        out
    }

    #[test]
    fn hull_examples() {
        assert_eq!(convex_hull::<i64>(&[]).dimension(), Dimension::Empty);
        let seg = poly(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(seg.dimension(), Dimension::Segment);
        assert_eq!(seg.vertices(), pts(&[(0, 0), (2, 0)]).as_slice());
        let tri = poly(&[(0, 0), (5, 0), (0, 5), (1, 1)]);
        assert_eq!(tri.vertices(), pts(&[(0, 0), (5, 0), (0, 5)]).as_slice());
        let dup = poly(&[(3, 3), (3, 3)]);
        assert_eq!(dup.dimension(), Dimension::Point);
    }

    #[test]
    fn hull_drops_collinear_boundary_points() {
        let sq = poly(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (2, 1),
            (2, 2),
            (1, 2),
            (0, 2),
            (0, 1),
            (1, 1),
        ]);
        assert_eq!(
            sq.vertices(),
            pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]).as_slice()
        );
        assert!(sq.area_twice() > 0);
    }

    #[test]
    fn lattice_point_examples() {
        let t = poly(&[(0, 0), (1, 0), (1, 2)]);
        assert_eq!(t.lattice_points(), pts(&[(0, 0), (1, 0), (1, 1), (1, 2)]));
        assert!(t.interior_lattice_points().is_empty());
        assert!(LatticePolygon::<i64>::empty().lattice_points().is_empty());

        let five = poly(&[(0, 0), (5, 0), (0, 5)]);
        assert_eq!(five.lattice_points(), grid_scan(&five, false));
        assert_eq!(five.lattice_points().len(), 21);
        assert_eq!(
            five.interior_lattice_points(),
            pts(&[(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)])
        );
        let unit = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(unit.interior_lattice_points().is_empty());
    }

    #[test]
    fn interior_polygon_examples() {
        let five = poly(&[(0, 0), (5, 0), (0, 5)]);
        assert_eq!(five.interior_polygon(), poly(&[(1, 1), (3, 1), (1, 3)]));
        let unit = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(unit.interior_polygon().is_empty());
        let three = poly(&[(0, 0), (3, 0), (0, 3)]);
        assert_eq!(three.interior_polygon(), poly(&[(1, 1)]));
    }

    #[test]
    fn area_examples() {
        assert_eq!(poly(&[(0, 0), (1, 0), (0, 1)]).area_twice(), 1);
        assert_eq!(poly(&[(0, 0), (5, 0), (0, 5)]).area_twice(), 25);
        assert_eq!(poly(&[(0, 0), (4, 2)]).area_twice(), 0);
    }

    #[test]
    fn pick_examples() {
        assert_eq!(
            poly(&[(0, 0), (1, 0), (1, 2)]).pick_area_twice().unwrap(),
            2
        );
        assert_eq!(
            poly(&[(0, 0), (5, 0), (0, 5)]).pick_area_twice().unwrap(),
            25
        );
        assert_eq!(
            poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
                .pick_area_twice()
                .unwrap(),
            2
        );
        assert!(matches!(
            poly(&[(0, 0), (3, 3)]).pick_area_twice(),
            Err(GeometryError::Degenerate {
                dimension: "segment"
            })
        ));
    }

    #[test]
    fn segment_points_and_containment() {
        let s = poly(&[(0, 0), (4, 2)]);
        assert_eq!(s.lattice_points(), pts(&[(0, 0), (2, 1), (4, 2)]));
        assert_eq!(s.count_lattice_points(), 3);
        assert!(s.contains(&LatticePoint::from_i64(2, 1)));
        assert!(!s.contains(&LatticePoint::from_i64(6, 3)));
    }

    #[test]
    fn counts_match_scan_on_odd_shapes() {
        let shapes = [
            vec![(0, 0), (7, 3), (2, 9), (-4, 5)],
            vec![(-3, -3), (3, 0), (0, 3)],
            vec![(0, 0), (13, 1), (1, 0)],
            vec![(0, 0), (2, 0), (3, 1), (3, 3), (1, 4), (-1, 2)],
        ];
        for s in shapes.iter() {
            let p = poly(s);
            assert_eq!(p.lattice_points(), grid_scan(&p, false), "{p}");
            assert_eq!(p.interior_lattice_points(), grid_scan(&p, true), "{p}");
            assert_eq!(p.count_lattice_points() as usize, p.lattice_points().len());
            assert_eq!(
                p.count_interior_points() as usize,
                p.interior_lattice_points().len()
            );
            assert_eq!(
                p.boundary_count() + p.count_interior_points(),
                p.count_lattice_points()
            );
        }
    }
}
