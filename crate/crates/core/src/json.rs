//! JSON encodings shared by the report and the CLI.
//!
//! Integers are emitted as JSON numbers when they fit in `i64` and as decimal
//! strings otherwise.

use serde_json::{json, Value};

use crate::lattice::{LatticePoint, LatticePolygon, PrimitiveVector, WidthCertificate};
use crate::scalar::Coord;

pub fn int<T: Coord>(v: &T) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

pub fn point<T: Coord>(p: &LatticePoint<T>) -> Value {
    json!([int(&p.x), int(&p.y)])
}

pub fn vertices<T: Coord>(p: &LatticePolygon<T>) -> Value {
    Value::Array(p.vertices().iter().map(point).collect())
}

pub fn direction<T: Coord>(u: &PrimitiveVector<T>) -> Value {
    json!([int(u.a()), int(u.b())])
}

pub fn width<T: Coord>(c: &WidthCertificate<T>) -> Value {
    json!({
        "width": int(&c.width),
        "direction": c.direction.as_ref().map(direction),
    })
}
