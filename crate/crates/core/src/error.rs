use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("direction ({a}, {b}) is not primitive")]
    NotPrimitive { a: String, b: String },
    #[error("matrix determinant is {det}, expected +1 or -1")]
    NotUnimodular { det: String },
    #[error("operation requires a full-dimensional polygon, got {dimension}")]
    Degenerate { dimension: &'static str },
    #[error("operation requires a nonempty polygon")]
    Empty,
    #[error("bad polygon text at token {index} ({token:?}): {reason}")]
    PolygonSyntax {
        index: usize,
        token: String,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BnError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    UnsupportedRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("polynomial is zero after combining like terms")]
    EmptyPolynomial,
}
