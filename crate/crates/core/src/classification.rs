//! Drivers that re-derive which interior Newton polygons can carry curves
//! without negative-ρ divisors.
//!
//! Verdicts are combinatorial. A class is *width-excluded* when every Newton
//! polygon with that interior has a gonality cap below the rank-1 threshold
//! `min_degree_nonneg_rho(g, 1)`, so the curve carries a rank-1 divisor with
//! negative ρ. Two algebro-geometric exclusions are encoded as named rules:
//! the plane-quintic interior `2Σ`, and the unique wide genus-10 interior
//! whose curves have Clifford dimension 3. Existence of curves for admissible
//! classes is not verified here.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::enumeration::{realizable_as_interior, Enumerator, PolygonClass};
use crate::error::EnumerationError;
use crate::lattice::{equivalent, is_standard_simplex_multiple, normal_form, simplex, Dimension};
use crate::svg::{render_sheet, Panel};
use crate::toric_bn::{
    gonality_bound_theorem, min_degree_nonneg_rho, plane_curve_profile, rho, DivisorHypothesis,
};
use crate::SmallPolygon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{what} = {value} is outside {min}..={max}")]
    Range {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

fn check(what: &'static str, value: i64, min: i64, max: i64) -> Result<(), ClassifyError> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(ClassifyError::Range {
            what,
            value,
            min,
            max,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reason {
    WidthExcluded,
    PlaneQuinticRule,
    Genus10CliffordRule,
    LargegInequality,
    Admissible,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::WidthExcluded => "width-excluded",
            Reason::PlaneQuinticRule => "plane-quintic-rule",
            Reason::Genus10CliffordRule => "genus10-clifford-rule",
            Reason::LargegInequality => "largeg-inequality",
            Reason::Admissible => "admissible",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome for one interior-polygon class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub polygon_class: PolygonClass<i64>,
    pub genus: i64,
    pub admissible: bool,
    pub reason: Reason,
    /// Largest gonality cap over Newton polygons with this interior.
    pub gonality_cap: i64,
    /// Smallest degree of a rank-1 divisor with `ρ >= 0`.
    pub threshold: i64,
}

impl Verdict {
    fn new(polygon_class: PolygonClass<i64>, genus: i64, reason: Reason, cap: i64) -> Self {
        Self {
            polygon_class,
            genus,
            admissible: reason == Reason::Admissible,
            reason,
            gonality_cap: cap,
            threshold: min_degree_nonneg_rho(genus, 1),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.polygon_class.to_json();
        let obj = v.as_object_mut().unwrap();
        obj.insert("genus".into(), json!(self.genus));
        obj.insert(
            "dimension".into(),
            json!(self.polygon_class.representative.dimension().as_str()),
        );
        obj.insert("admissible".into(), json!(self.admissible));
        obj.insert("reason".into(), json!(self.reason.as_str()));
        obj.insert("gonality_cap".into(), json!(self.gonality_cap));
        obj.insert("threshold".into(), json!(self.threshold));
        v
    }
}

/// `ρ(6, 5, 2)`: the degree-5 rank-2 divisor on a plane quintic.
pub fn plane_quintic_rho() -> i64 {
    rho(&DivisorHypothesis::new(6, 5, 2))
}

/// `ρ(10, 9, 3)`: a rank-3 divisor of degree 9 in genus 10.
pub fn genus10_clifford_rho() -> i64 {
    rho(&DivisorHypothesis::new(10, 9, 3))
}

pub fn is_plane_quintic_interior(p: &SmallPolygon) -> bool {
    equivalent(p, &simplex(2))
}

/// Verdicts for every realizable interior-polygon class with at most
/// `max_points` lattice points.
///
/// Width rule: a class `P` with `g` points survives when
/// `lw(P) + 2 >= min_degree_nonneg_rho(g, 1)`, or when `P ≅ kΣ` and
/// `lw(P) + 3` reaches the threshold (the Newton polygon `(k+3)Σ`).
pub fn classify_interior_polygons(
    enumerator: &Enumerator,
    max_points: i64,
) -> Result<Vec<Verdict>, ClassifyError> {
    check("max_points", max_points, 1, 6)?;
    let mut out = Vec::new();
    for g in 1..=max_points {
        let threshold = min_degree_nonneg_rho(g, 1);
        for class in enumerator.by_lattice_points::<i64>(g)? {
            if !realizable_as_interior(&class.representative) {
                continue;
            }
            let p = &class.representative;
            let simplex_like =
                p.dimension() == Dimension::Point || is_standard_simplex_multiple(p).is_some();
            let cap = if simplex_like {
                class.lw + 3
            } else {
                class.lw + 2
            };
            let reason = if cap < threshold {
                Reason::WidthExcluded
            } else if is_plane_quintic_interior(p) {
                Reason::PlaneQuinticRule
            } else {
                Reason::Admissible
            };
            out.push(Verdict::new(class, g, reason, cap));
        }
    }
    Ok(out)
}

/// Width data for one genus between 7 and 12.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidrangeSummary {
    pub genus: i64,
    pub threshold: i64,
    pub ceil_half: i64,
    pub n_polygons: usize,
    pub max_lw: i64,
    pub verdicts: Vec<Verdict>,
}

impl MidrangeSummary {
    /// `max lw(Δ) <= ⌈g/2⌉` over all `Δ` with `g` interior points.
    pub fn width_bound_holds(&self) -> bool {
        self.max_lw <= self.ceil_half
    }

    pub fn count(&self, reason: Reason) -> usize {
        self.verdicts.iter().filter(|v| v.reason == reason).count()
    }

    pub fn exceptional(&self) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|v| v.reason == Reason::Genus10CliffordRule)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "threshold": self.threshold,
            "ceil_half": self.ceil_half,
            "n_polygons": self.n_polygons,
            "max_lw": self.max_lw,
            "width_bound_holds": self.width_bound_holds(),
            "n_interior_classes": self.verdicts.len(),
            "width_excluded": self.count(Reason::WidthExcluded),
            "genus10_clifford_rule": self.count(Reason::Genus10CliffordRule),
            "admissible": self.count(Reason::Admissible),
            "interior_classes": self.verdicts.iter().map(Verdict::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Gonality cap of a single Newton polygon: its lattice width, or `d - 1`
/// for `dΣ` (smooth plane curves of degree `d`).
fn newton_gonality_cap(delta: &SmallPolygon, lw: i64) -> i64 {
    match is_standard_simplex_multiple(delta) {
        Some(d) => plane_curve_profile(d).map(|(_, gon)| gon).unwrap_or(lw),
        None => lw,
    }
}

/// Enumerate every `Δ` with `g` interior points and group the gonality caps
/// by interior class. For `g = 10` the classes whose cap reaches the
/// threshold are tagged with the Clifford-dimension rule.
pub fn verify_midrange(enumerator: &Enumerator, g: i64) -> Result<MidrangeSummary, ClassifyError> {
    check("g", g, 7, 12)?;
    let threshold = min_degree_nonneg_rho(g, 1);
    let all = enumerator.by_interior_points::<i64>(g)?;
    let mut caps: BTreeMap<SmallPolygon, i64> = BTreeMap::new();
    for delta in all.iter() {
        let inner = normal_form(&delta.representative.interior_polygon());
        let cap = newton_gonality_cap(&delta.representative, delta.lw);
        let entry = caps.entry(inner).or_insert(cap);
        *entry = (*entry).max(cap);
    }
    let verdicts = caps
        .into_iter()
        .map(|(inner, cap)| {
            let reason = if cap < threshold {
                Reason::WidthExcluded
            } else if g == 10 {
                Reason::Genus10CliffordRule
            } else {
                Reason::Admissible
            };
            Verdict::new(PolygonClass::of(&inner), g, reason, cap)
        })
        .collect();
    Ok(MidrangeSummary {
        genus: g,
        threshold,
        ceil_half: (g + 1) / 2,
        n_polygons: all.len(),
        max_lw: all.iter().map(|c| c.lw).max().unwrap_or(-1),
        verdicts,
    })
}

/// For `3 <= g <= g_max`: whether the rank-1 threshold fits under the
/// theorem bound on gonality.
pub fn verify_largeg(g_max: i64) -> Result<Vec<(i64, bool)>, ClassifyError> {
    check("g_max", g_max, 13, i64::MAX / 16)?;
    Ok((3..=g_max)
        .map(|g| {
            let bound = gonality_bound_theorem(g).expect("g >= 3");
            (g, min_degree_nonneg_rho(g, 1) <= bound)
        })
        .collect())
}

/// Last genus at which the inequality still holds.
pub fn crossover_genus(table: &[(i64, bool)]) -> Option<i64> {
    table.iter().filter(|(_, ok)| *ok).map(|(g, _)| *g).max()
}

/// The complete classification, ready for serialization.
#[derive(Clone, Debug)]
pub struct Report {
    pub small_genus: Vec<Verdict>,
    pub midrange: Vec<MidrangeSummary>,
    pub largeg: Vec<(i64, bool)>,
    pub max_genus: i64,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Largest interior point count for the admissible part (1..=6).
    pub max_genus: i64,
    /// Upper end of the large-genus table.
    pub largeg_max: i64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            max_genus: 6,
            largeg_max: 200,
        }
    }
}

impl Report {
    pub fn admissible(&self) -> impl Iterator<Item = &Verdict> {
        self.small_genus.iter().filter(|v| v.admissible)
    }

    pub fn excluded(&self) -> impl Iterator<Item = &Verdict> {
        self.small_genus.iter().filter(|v| !v.admissible)
    }

    pub fn genus10(&self) -> Option<&MidrangeSummary> {
        self.midrange.iter().find(|m| m.genus == 10)
    }

    pub fn genus10_exceptional(&self) -> Option<&Verdict> {
        self.genus10().and_then(|m| m.exceptional())
    }

    pub fn plane_quintic(&self) -> PolygonClass<i64> {
        PolygonClass::of(&simplex(2))
    }

    pub fn crossover(&self) -> Option<i64> {
        crossover_genus(&self.largeg)
    }

    pub fn to_json(&self) -> Value {
        let admissible: Vec<_> = self.admissible().collect();
        let degenerate = admissible
            .iter()
            .filter(|v| !v.polygon_class.representative.is_full())
            .count();
        let mut by_genus: BTreeMap<String, usize> = BTreeMap::new();
        for v in admissible.iter() {
            *by_genus.entry(v.genus.to_string()).or_default() += 1;
        }
        let midrange: serde_json::Map<String, Value> = self
            .midrange
            .iter()
            .map(|m| (m.genus.to_string(), m.to_json()))
            .collect();
        let genus10 = self.genus10().map(|m| {
            json!({
                "interior_class_count": m.verdicts.len(),
                "width_excluded": m.count(Reason::WidthExcluded),
                "exceptional_count": m.count(Reason::Genus10CliffordRule),
                "exceptional_class": m.exceptional().map(Verdict::to_json),
                "rho_rank3_degree9": genus10_clifford_rho(),
            })
        });
        json!({
            "schema": 1,
            "max_genus": self.max_genus,
            "admissible": {
                "count": admissible.len(),
                "degenerate_count": degenerate,
                "full_dimensional_count": admissible.len() - degenerate,
                "by_genus": by_genus,
                "classes": admissible.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
            },
            "excluded": self.excluded().map(Verdict::to_json).collect::<Vec<_>>(),
            "plane_quintic": {
                "class": self.plane_quintic().to_json(),
                "rho_rank2_degree5": plane_quintic_rho(),
            },
            "midrange": midrange,
            "genus10": genus10,
            "largeg": self.largeg.iter().map(|(g, ok)| json!({"g": g, "holds": ok})).collect::<Vec<_>>(),
            "crossover_genus": self.crossover(),
        })
    }
}

impl Report {
    /// Drawings of the admissible classes, the genus-10 exception and `2Σ`.
    pub fn figure_panels(&self) -> Vec<Panel> {
        let mut panels: Vec<Panel> = self
            .admissible()
            .map(|v| Panel {
                title: format!("g = {}, lw = {}", v.genus, v.polygon_class.lw),
                polygon: v.polygon_class.representative.clone(),
            })
            .collect();
        if let Some(v) = self.genus10_exceptional() {
            panels.push(Panel {
                title: format!("g = 10, lw = {} (excluded)", v.polygon_class.lw),
                polygon: v.polygon_class.representative.clone(),
            });
        }
        let quintic = self.plane_quintic();
        panels.push(Panel {
            title: "g = 6, 2Σ (excluded)".to_string(),
            polygon: quintic.representative,
        });
        panels
    }

    pub fn figures_svg(&self) -> String {
        render_sheet(&self.figure_panels())
    }
}

pub fn full_report(
    enumerator: &Enumerator,
    options: &ReportOptions,
) -> Result<Report, ClassifyError> {
    let small_genus = classify_interior_polygons(enumerator, options.max_genus)?;
    let midrange = (7..=12)
        .map(|g| verify_midrange(enumerator, g))
        .collect::<Result<Vec<_>, _>>()?;
    let largeg = verify_largeg(options.largeg_max)?;
    Ok(Report {
        small_genus,
        midrange,
        largeg,
        max_genus: options.max_genus,
    })
}
