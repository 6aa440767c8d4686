//! The integer coordinate abstraction shared by every geometric routine.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar usable as a lattice coordinate.
///
/// Implemented for every signed integer type with the listed capabilities;
/// in practice `i64`, `i128` and [`BigInt`].
pub trait Coord:
    Integer
    + Signed
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Lossless conversion from a small constant.
    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("small integer constant fits every Coord")
    }

    /// `ceil(self / d)` for `d != 0`.
    fn ceil_div(&self, d: &Self) -> Self {
        -((-self.clone()).div_floor(d))
    }

    /// Convert between coordinate types. Panics if the value does not fit.
    fn cast<U: Coord>(&self) -> U {
        match self.to_i64() {
            Some(v) => U::of(v),
            None => {
                let big = BigInt::parse_bytes(self.to_string().as_bytes(), 10)
                    .expect("Display of an integer is decimal");
                U::from_bigint(&big).expect("coordinate out of range for target type")
            }
        }
    }

    #[doc(hidden)]
    fn from_bigint(v: &BigInt) -> Option<Self> {
        if let Some(s) = v.to_i64() {
            return Self::from_i64(s);
        }
        if let Some(s) = v.to_i128() {
            return Self::from_i128(s);
        }
        // Only unbounded types can hold values beyond i128; route through
        // the decimal representation with a fold.
        let ten = Self::of(10);
        let mut acc = Self::zero();
        let digits = v.magnitude().to_str_radix(10);
        for ch in digits.bytes() {
            acc = acc * ten.clone() + Self::of(i64::from(ch - b'0'));
        }
        Some(if v.is_negative() { -acc } else { acc })
    }
}

impl<T> Coord for T where
    T: Integer
        + Signed
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn extended_gcd<T: Coord>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_div_rounds_up() {
        assert_eq!(7i64.ceil_div(&2), 4);
        assert_eq!((-7i64).ceil_div(&2), -3);
        assert_eq!(7i64.ceil_div(&-2), -3);
        assert_eq!(6i64.ceil_div(&3), 2);
    }

    #[test]
    fn extended_gcd_bezout() {
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                let (g, s, t) = extended_gcd(&a, &b);
                assert_eq!(g, a.gcd(&b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn cast_between_widths() {
        let big: BigInt = BigInt::from(12345678901i64) * BigInt::from(1000);
        let back: i128 = big.cast();
        assert_eq!(back, 12345678901000i128);
        let b2: BigInt = (-42i64).cast();
        assert_eq!(b2, BigInt::from(-42));
        let huge = BigInt::from(i128::MAX) * BigInt::from(7);
        let again: BigInt = huge.cast();
        assert_eq!(again, huge);
    }
}
