//! Exact lattice-polygon toolkit for Newton polygons of plane curves.
//!
//! Geometry is generic over the integer coordinate type ([`Coord`]); the
//! aliases below fix the two instantiations used in practice: unbounded
//! [`BigInt`] for user input and `i64` for the enumeration hot path.

pub mod acceptance;
pub mod analysis;
pub mod classification;
pub mod enumeration;
pub mod error;
pub mod json;
pub mod lattice;
pub mod laurent;
pub mod scalar;
pub mod svg;
pub mod toric_bn;

pub use num_bigint::BigInt;
pub use scalar::Coord;

/// Polygon with unbounded integer coordinates.
pub type Polygon = lattice::LatticePolygon<BigInt>;
/// Point with unbounded integer coordinates.
pub type Point = lattice::LatticePoint<BigInt>;
/// Polygon with machine-word coordinates, used by enumeration.
pub type SmallPolygon = lattice::LatticePolygon<i64>;
