//! Exact integer geometry of convex lattice polygons.

mod map;
mod normal_form;
mod point;
mod polygon;
mod text;
mod width;

pub use map::AffineUnimodularMap;
pub use normal_form::{
    equivalent, is_standard_simplex_multiple, normal_form, normal_form_with_map, simplex,
};
pub use point::{LatticePoint, PrimitiveVector};
pub use polygon::{convex_hull, Dimension, LatticePolygon};
pub use text::{parse_polygon_json, parse_polygon_text};
pub use width::{lattice_width, width_along, WidthCertificate};
