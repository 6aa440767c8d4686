//! Polygon input formats: `"x,y x,y ..."` and a JSON array of `[x, y]` pairs.
//! Both accept unordered point lists; the hull is taken.

use std::str::FromStr;

use crate::error::GeometryError;
use crate::lattice::point::LatticePoint;
use crate::lattice::polygon::{convex_hull, LatticePolygon};
use crate::scalar::Coord;

pub fn parse_polygon_text<T: Coord + FromStr>(
    text: &str,
) -> Result<LatticePolygon<T>, GeometryError> {
    let mut pts = Vec::new();
    for (index, token) in text.split_whitespace().enumerate() {
        let err = |reason| GeometryError::PolygonSyntax {
            index,
            token: token.to_string(),
            reason,
        };
        let (x, y) = token.split_once(',').ok_or_else(|| err("expected x,y"))?;
        let x = T::from_str(x.trim()).map_err(|_| err("x is not an integer"))?;
        let y = T::from_str(y.trim()).map_err(|_| err("y is not an integer"))?;
        pts.push(LatticePoint::new(x, y));
    }
    Ok(convex_hull(&pts))
}

pub fn parse_polygon_json<T: Coord + FromStr>(
    text: &str,
) -> Result<LatticePolygon<T>, GeometryError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|_| GeometryError::PolygonSyntax {
            index: 0,
            token: text.chars().take(32).collect(),
            reason: "not valid JSON",
        })?;
    let items = value.as_array().ok_or(GeometryError::PolygonSyntax {
        index: 0,
        token: String::new(),
        reason: "expected an array of [x, y] pairs",
    })?;
    let mut pts = Vec::with_capacity(items.len());
    for (index, item) in items.iter().enumerate() {
        let err = |reason| GeometryError::PolygonSyntax {
            index,
            token: item.to_string(),
            reason,
        };
        let pair = item
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| err("expected [x, y]"))?;
        let coord = |v: &serde_json::Value| -> Result<T, GeometryError> {
            let s = match v {
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                serde_json::Value::String(s) => s.clone(),
                _ => return Err(err("coordinates must be integers")),
            };
            T::from_str(&s).map_err(|_| err("coordinates must be integers"))
        };
        pts.push(LatticePoint::new(coord(&pair[0])?, coord(&pair[1])?));
    }
    Ok(convex_hull(&pts))
}
