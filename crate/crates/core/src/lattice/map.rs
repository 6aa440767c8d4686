use crate::error::GeometryError;
use crate::lattice::point::LatticePoint;
use crate::lattice::polygon::{convex_hull, LatticePolygon};
use crate::scalar::Coord;

/// `p ↦ M·p + t` with `M ∈ GL₂(Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineUnimodularMap<T> {
    m: [[T; 2]; 2],
    t: [T; 2],
}

impl<T: Coord> AffineUnimodularMap<T> {
    pub fn new(m11: T, m12: T, m21: T, m22: T, tx: T, ty: T) -> Result<Self, GeometryError> {
        let det = m11.clone() * m22.clone() - m12.clone() * m21.clone();
        if !det.abs().is_one() {
            return Err(GeometryError::NotUnimodular {
                det: det.to_string(),
            });
        }
        Ok(Self {
            m: [[m11, m12], [m21, m22]],
            t: [tx, ty],
        })
    }

    pub fn from_i64(m: [[i64; 2]; 2], t: [i64; 2]) -> Result<Self, GeometryError> {
        Self::new(
            T::of(m[0][0]),
            T::of(m[0][1]),
            T::of(m[1][0]),
            T::of(m[1][1]),
            T::of(t[0]),
            T::of(t[1]),
        )
    }

    pub fn identity() -> Self {
        Self {
            m: [[T::one(), T::zero()], [T::zero(), T::one()]],
            t: [T::zero(), T::zero()],
        }
    }

    pub fn translation(by: &LatticePoint<T>) -> Self {
        Self {
            m: [[T::one(), T::zero()], [T::zero(), T::one()]],
            t: [by.x.clone(), by.y.clone()],
        }
    }

    pub fn determinant(&self) -> T {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn matrix(&self) -> &[[T; 2]; 2] {
        &self.m
    }

    pub fn offset(&self) -> &[T; 2] {
        &self.t
    }

    fn linear(&self, x: &T, y: &T) -> (T, T) {
        (
            self.m[0][0].clone() * x.clone() + self.m[0][1].clone() * y.clone(),
            self.m[1][0].clone() * x.clone() + self.m[1][1].clone() * y.clone(),
        )
    }

    pub fn apply_point(&self, p: &LatticePoint<T>) -> LatticePoint<T> {
        let (x, y) = self.linear(&p.x, &p.y);
        LatticePoint::new(x + self.t[0].clone(), y + self.t[1].clone())
    }

    /// Image polygon, re-normalized to counterclockwise order.
    pub fn apply(&self, polygon: &LatticePolygon<T>) -> LatticePolygon<T> {
        let image: Vec<_> = polygon
            .vertices()
            .iter()
            .map(|v| self.apply_point(v))
            .collect();
        convex_hull(&image)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[T::zero(), T::zero()], [T::zero(), T::zero()]];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[i][0].clone() * other.m[0][j].clone()
                    + self.m[i][1].clone() * other.m[1][j].clone();
            }
        }
        let (tx, ty) = self.linear(&other.t[0], &other.t[1]);
        Self {
            m,
            t: [tx + self.t[0].clone(), ty + self.t[1].clone()],
        }
    }

    pub fn inverse(&self) -> Self {
        // det = ±1, so the adjugate times det is the integer inverse.
        let det = self.determinant();
        let m = [
            [
                self.m[1][1].clone() * det.clone(),
                -self.m[0][1].clone() * det.clone(),
            ],
            [
                -self.m[1][0].clone() * det.clone(),
                self.m[0][0].clone() * det,
            ],
        ];
        let lin = Self {
            m,
            t: [T::zero(), T::zero()],
        };
        let (tx, ty) = lin.linear(&self.t[0], &self.t[1]);
        Self {
            t: [-tx, -ty],
            ..lin
        }
    }
}
