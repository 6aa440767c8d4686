use std::fmt;

use crate::error::GeometryError;
use crate::scalar::Coord;

/// A point of Z². Ordered lexicographically by `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Coord> LatticePoint<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Self::new(T::of(x), T::of(y))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.x.clone() - other.x.clone(),
            self.y.clone() - other.y.clone(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.x.clone() + other.x.clone(),
            self.y.clone() + other.y.clone(),
        )
    }

    /// z-component of `self × other`.
    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// Orientation of `c` relative to the directed line `a -> b`;
    /// positive when `c` lies to the left.
    pub fn orient(a: &Self, b: &Self, c: &Self) -> T {
        b.sub(a).cross(&c.sub(a))
    }

    pub fn cast<U: Coord>(&self) -> LatticePoint<U> {
        LatticePoint::new(self.x.cast(), self.y.cast())
    }
}

impl<T: fmt::Display> fmt::Display for LatticePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// A primitive integer direction `(a, b)`, read as the functional
/// `(x, y) ↦ a·x + b·y`. Always stored with canonical sign:
/// `a > 0`, or `a = 0` and `b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVector<T> {
    a: T,
    b: T,
}

impl<T: Coord> PrimitiveVector<T> {
    /// Accepts `(a, b)` only if it is nonzero with coprime entries; the sign
    /// is canonicalized.
    pub fn new(a: T, b: T) -> Result<Self, GeometryError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeometryError::ZeroDirection);
        }
        if !a.gcd(&b).is_one() {
            return Err(GeometryError::NotPrimitive {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self::canonical_sign(a, b))
    }

    /// The primitive direction parallel to a nonzero vector, with canonical sign.
    pub fn reduce(a: T, b: T) -> Result<Self, GeometryError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeometryError::ZeroDirection);
        }
        let g = a.gcd(&b);
        Ok(Self::canonical_sign(a / g.clone(), b / g))
    }

    fn canonical_sign(a: T, b: T) -> Self {
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            Self { a: -a, b: -b }
        } else {
            Self { a, b }
        }
    }

    pub(crate) fn new_unchecked(a: T, b: T) -> Self {
        Self::canonical_sign(a, b)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn eval(&self, p: &LatticePoint<T>) -> T {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone()
    }

    pub fn cast<U: Coord>(&self) -> PrimitiveVector<U> {
        PrimitiveVector {
            a: self.a.cast(),
            b: self.b.cast(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for PrimitiveVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}
