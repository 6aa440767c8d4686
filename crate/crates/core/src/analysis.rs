//! One-polygon analysis: everything the Newton polygon says about a smooth
//! curve it carries.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::{BnError, GeometryError, ParseError};
use crate::json;
use crate::lattice::{equivalent, parse_polygon_text, simplex};
use crate::laurent;
use crate::toric_bn::{
    gonality_bound_theorem, min_degree_nonneg_rho, plane_curve_profile, profile, CurveProfile,
};
use crate::{BigInt, Polygon};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("cannot parse polynomial: {0}")]
    Parse(#[from] ParseError),
    #[error("cannot parse polygon: {0}")]
    Polygon(GeometryError),
    #[error("{0}")]
    Degenerate(GeometryError),
}

impl From<BnError> for AnalysisError {
    fn from(e: BnError) -> Self {
        match e {
            BnError::Geometry(g) => AnalysisError::Degenerate(g),
            BnError::Precondition(_) => AnalysisError::Degenerate(GeometryError::Degenerate {
                dimension: "lower-dimensional",
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Poly(String),
    Polygon(String),
}

impl Input {
    fn json(&self) -> Value {
        match self {
            Input::Poly(s) => json!({"poly": s}),
            Input::Polygon(s) => json!({"polygon": s}),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub input: Input,
    pub profile: CurveProfile<BigInt>,
    pub lattice_points: BigInt,
    pub boundary_points: BigInt,
    /// Gonality cap used for the verdict: `lw(Δ)`, or `d - 1` for `dΣ`.
    pub gonality_cap: BigInt,
    pub rank1_threshold: Option<i64>,
    pub theorem_bound: Option<i64>,
    pub forces_negative_rho: Option<bool>,
    pub verdict: String,
}

/// The genus-10 Newton polygon `3Υ`, `Υ = conv{(-1,-1), (1,0), (0,1)}`.
fn three_upsilon() -> Polygon {
    Polygon::from_i64_pairs(&[(-3, -3), (3, 0), (0, 3)])
}

pub fn analyze(input: Input) -> Result<AnalysisReport, AnalysisError> {
    let polygon: Polygon = match &input {
        Input::Poly(s) => laurent::parse(s)?.newton_polygon(),
        Input::Polygon(s) => parse_polygon_text(s).map_err(AnalysisError::Polygon)?,
    };
    analyze_polygon(input, &polygon)
}

pub fn analyze_polygon(input: Input, polygon: &Polygon) -> Result<AnalysisReport, AnalysisError> {
    let profile = profile(polygon)?;
    let g = &profile.genus_if_smooth;
    let gonality_cap = match profile.simplex_d.as_ref().and_then(|d| d.to_i64()) {
        Some(d) => BigInt::from(plane_curve_profile(d).expect("d >= 1").1),
        None => profile.lw_delta.width.clone(),
    };
    let small_g = g.to_i64().filter(|g| *g <= i64::MAX / 16);
    let rank1_threshold = small_g.map(|g| min_degree_nonneg_rho(g, 1));
    let theorem_bound = small_g.and_then(|g| gonality_bound_theorem(g).ok());
    let forces_negative_rho = rank1_threshold.map(|m| gonality_cap < BigInt::from(m));

    let verdict = match (rank1_threshold, forces_negative_rho) {
        (Some(m), Some(true)) => format!(
            "gonality at most {gonality_cap} < {m}: carries a rank-1 divisor with negative ρ, \
             not Brill–Noether general"
        ),
        (Some(_), Some(false)) => {
            let inner = &profile.interior_polygon;
            let mut text = String::from("combinatorially admissible by width");
            if *g == BigInt::from(6) && equivalent(inner, &simplex(2)) {
                text.push_str("; excluded by plane-quintic rule");
            } else if *g == BigInt::from(10)
                && equivalent(inner, &three_upsilon().interior_polygon())
            {
                text.push_str("; excluded by genus-10 Clifford rule");
            }
            text
        }
        _ => "genus too large to evaluate".to_string(),
    };

    Ok(AnalysisReport {
        input,
        lattice_points: polygon.count_lattice_points(),
        boundary_points: polygon.boundary_count(),
        gonality_cap,
        rank1_threshold,
        theorem_bound,
        forces_negative_rho,
        verdict,
        profile,
    })
}

fn int_or_null(v: Option<i64>) -> Value {
    v.map(Value::from).unwrap_or(Value::Null)
}

impl AnalysisReport {
    pub fn to_json(&self) -> Value {
        let p = &self.profile;
        json!({
            "schema": 1,
            "input": self.input.json(),
            "newton_polygon": json::vertices(&p.polygon),
            "lattice_points": json::int(&self.lattice_points),
            "boundary_points": json::int(&self.boundary_points),
            "interior_points": json::int(&p.genus_if_smooth),
            "area_twice": json::int(&p.polygon.area_twice()),
            "interior_polygon": json::vertices(&p.interior_polygon),
            "interior_dimension": p.interior_polygon.dimension().as_str(),
            "lattice_width": json::width(&p.lw_delta),
            "interior_lattice_width": json::width(&p.lw_interior),
            "genus_if_smooth": json::int(&p.genus_if_smooth),
            "plane_curve_degree": p.simplex_d.as_ref().map(json::int),
            "gonality_cap": json::int(&self.gonality_cap),
            "rank1_threshold": int_or_null(self.rank1_threshold),
            "theorem_bound": int_or_null(self.theorem_bound),
            "forces_negative_rho": self.forces_negative_rho,
            "verdict": self.verdict,
        })
    }

    pub fn to_text(&self) -> String {
        let p = &self.profile;
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
        let dir = p
            .lw_delta
            .direction
            .as_ref()
            .map_or("-".to_string(), |d| d.to_string());
        let mut lines = vec![
            format!("newton polygon    {}", p.polygon),
            format!(
                "lattice points    {} ({} boundary, {} interior)",
                self.lattice_points, self.boundary_points, p.genus_if_smooth
            ),
            format!(
                "interior polygon  {} ({})",
                p.interior_polygon,
                p.interior_polygon.dimension()
            ),
            format!("lattice width     {} along {}", p.lw_delta.width, dir),
            format!("genus if smooth   {}", p.genus_if_smooth),
        ];
        if let Some(d) = &p.simplex_d {
            lines.push(format!("plane curve       degree {d}"));
        }
        lines.push(format!("gonality cap      {}", self.gonality_cap));
        lines.push(format!("rank-1 threshold  {}", opt(self.rank1_threshold)));
        lines.push(format!("theorem bound     {}", opt(self.theorem_bound)));
        lines.push(format!("verdict           {}", self.verdict));
        lines.join("\n") + "\n"
    }
}
