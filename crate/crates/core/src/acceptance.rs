//! The ten acceptance checks, shared by the `acceptance` test target and the
//! `selftest` command. Every check is exact; the only pinned parameters are
//! the corpus sizes and the random seed below.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classification::{
    classify_interior_polygons, full_report, is_plane_quintic_interior, verify_largeg,
    verify_midrange, Reason, ReportOptions,
};
use crate::enumeration::{
    naive_by_interior_points, naive_by_lattice_points, realizable_as_interior,
    search_interior_witness, Enumerator, PolygonClass,
};
use crate::lattice::{equivalent, lattice_width, simplex, LatticePoint, LatticePolygon};
use crate::toric_bn::{
    gonality_bound_theorem, min_degree_nonneg_rho, profile, reduce_to_low_rank, rho, serre_dual,
    width_from_interior, DivisorHypothesis,
};
use crate::SmallPolygon;

/// Largest interior count in the enumeration corpus.
pub const CORPUS_MAX_GENUS: i64 = 12;
/// Random hulls added to the corpus for the property checks.
pub const RANDOM_HULLS: usize = 1000;
/// Random hull vertices are drawn from `[0, RANDOM_BOX]²`.
pub const RANDOM_BOX: i64 = 20;
pub const RANDOM_SEED: u64 = 0x5eed_f6e0;
/// Upper end of the large-genus table.
pub const LARGEG_MAX: i64 = 200;
/// Box side for the brute-force lattice-point enumerator.
pub const NAIVE_POINTS_SIDE: i64 = 5;
/// Box side for the brute-force interior-point enumerator.
pub const NAIVE_INTERIOR_SIDE: i64 = 5;
/// Search window for brute-force realizability.
pub const WITNESS_MARGIN: i64 = 5;
pub const WITNESS_MAX_POINTS: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Set when the criterion fails as stated for a documented reason.
    pub known_failure: Option<&'static str>,
}

impl Outcome {
    /// Passed, or failed exactly as documented.
    pub fn acceptable(&self) -> bool {
        self.passed || self.known_failure.is_some()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {:>2} {tag} {}: {}",
            self.id, self.name, self.detail
        )?;
        match (self.passed, self.known_failure) {
            (false, Some(why)) => write!(f, " [known: {why}]"),
            _ => Ok(()),
        }
    }
}

fn outcome(id: u8, name: &'static str, failures: Vec<String>, ok_detail: String) -> Outcome {
    Outcome {
        id,
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            ok_detail
        } else {
            failures.join("; ")
        },
        known_failure: None,
    }
}

/// Shared state: the enumerator and the lazily built polygon corpus.
pub struct Suite {
    enumerator: Enumerator,
    threads: usize,
    corpus: OnceLock<Vec<Vec<PolygonClass<i64>>>>,
    random: OnceLock<Vec<SmallPolygon>>,
}

impl Suite {
    pub fn new(threads: usize) -> Self {
        Self {
            enumerator: Enumerator::new().threads(threads),
            threads,
            corpus: OnceLock::new(),
            random: OnceLock::new(),
        }
    }

    /// `corpus()[g - 1]`: every polygon class with `g` interior points.
    pub fn corpus(&self) -> &[Vec<PolygonClass<i64>>] {
        self.corpus.get_or_init(|| {
            (1..=CORPUS_MAX_GENUS)
                .map(|g| self.enumerator.by_interior_points(g).expect("g in range"))
                .collect()
        })
    }

    pub fn random_hulls(&self) -> &[SmallPolygon] {
        self.random
            .get_or_init(|| random_hulls(RANDOM_HULLS, RANDOM_BOX, RANDOM_SEED))
    }

    fn all_polygons(&self) -> impl Iterator<Item = &SmallPolygon> {
        self.corpus()
            .iter()
            .flatten()
            .map(|c| &c.representative)
            .chain(self.random_hulls().iter())
    }

    pub fn run(&self, id: u8) -> Outcome {
        match id {
            1 => self.classification_count(),
            2 => self.genus_ten(),
            3 => self.midrange_widths(),
            4 => largeg_crossover(),
            5 => self.interior_width_relation(),
            6 => self.pick_and_area(),
            7 => rho_arithmetic(),
            8 => self.plane_curves(),
            9 => self.cross_validation(),
            10 => self.determinism(),
            _ => panic!("no criterion {id}"),
        }
    }

    pub fn run_all(&self) -> Vec<Outcome> {
        (1..=10).map(|id| self.run(id)).collect()
    }

    fn classification_count(&self) -> Outcome {
        let start = Instant::now();
        let verdicts = classify_interior_polygons(&self.enumerator, 6).expect("range");
        let admissible: Vec<_> = verdicts.iter().filter(|v| v.admissible).collect();
        let degenerate = admissible
            .iter()
            .filter(|v| !v.polygon_class.representative.is_full())
            .count();
        let mut failures = Vec::new();
        if admissible.len() != 11 {
            failures.push(format!(
                "{} admissible classes, expected 11",
                admissible.len()
            ));
        }
        outcome(
            1,
            "classification count",
            failures,
            format!(
                "11 admissible ({degenerate} degenerate, {} full) in {:.2?}",
                admissible.len() - degenerate,
                start.elapsed()
            ),
        )
    }

    fn genus_ten(&self) -> Outcome {
        let classes = &self.corpus()[9];
        let mut inner: Vec<SmallPolygon> = classes
            .iter()
            .map(|c| crate::lattice::normal_form(&c.representative.interior_polygon()))
            .collect();
        inner.sort();
        inner.dedup();
        let wide = inner
            .iter()
            .filter(|p| lattice_width(*p).width >= 4)
            .count();
        let summary = verify_midrange(&self.enumerator, 10).expect("range");
        let mut failures = Vec::new();
        if inner.len() != 22 {
            failures.push(format!("{} interior classes, expected 22", inner.len()));
        }
        if wide != 1 {
            failures.push(format!("{wide} classes of width >= 4, expected 1"));
        }
        if summary.count(Reason::WidthExcluded) != 21
            || summary.count(Reason::Genus10CliffordRule) != 1
        {
            failures.push(format!(
                "verdicts: {} width-excluded, {} Clifford rule",
                summary.count(Reason::WidthExcluded),
                summary.count(Reason::Genus10CliffordRule)
            ));
        }
        outcome(
            2,
            "genus-10 structure",
            failures,
            format!(
                "{} polygons, 22 interior classes, 1 of width >= 4",
                classes.len()
            ),
        )
    }

    fn midrange_widths(&self) -> Outcome {
        let expected = [(7, 4), (8, 4), (9, 5), (11, 5), (12, 6)];
        let mut failures = Vec::new();
        let mut seen = Vec::new();
        for (g, want) in expected {
            let max = self.corpus()[g as usize - 1]
                .iter()
                .map(|c| c.lw)
                .max()
                .unwrap_or(-1);
            seen.push(max.to_string());
            if max != want {
                failures.push(format!("g={g}: max width {max}, expected {want}"));
            }
        }
        outcome(
            3,
            "midrange width table",
            failures,
            format!("max widths {}", seen.join(", ")),
        )
    }

    fn interior_width_relation(&self) -> Outcome {
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for p in self.all_polygons() {
            checked += 1;
            let direct = lattice_width(p).width;
            let via = width_from_interior(p).expect("full");
            if direct != via && failures.len() < 5 {
                failures.push(format!("{p}: lw {direct}, from interior {via}"));
            }
        }
        outcome(
            5,
            "width from interior polygon",
            failures,
            format!("{checked} polygons, zero violations"),
        )
    }

    fn pick_and_area(&self) -> Outcome {
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for p in self.all_polygons() {
            checked += 1;
            let a2 = p.area_twice();
            // shoelace against E + 2I - 2 with E from edge gcds, I from row scans
            let pick = p.boundary_count() + 2 * p.count_interior_points() - 2;
            if a2 != pick && failures.len() < 5 {
                failures.push(format!("{p}: Pick fails"));
            }
            // 8·area >= 3·lw² with area = a2 / 2
            let lw = lattice_width(p).width;
            if 4 * a2 < 3 * lw * lw && failures.len() < 5 {
                failures.push(format!("{p}: area below 3/8 lw²"));
            }
        }
        outcome(
            6,
            "Pick and area bound",
            failures,
            format!("{checked} polygons, zero violations"),
        )
    }

    fn plane_curves(&self) -> Outcome {
        let mut failures = Vec::new();
        for d in 3..=12 {
            let prof = profile(&simplex::<i64>(d)).expect("full");
            if prof.genus_if_smooth != (d - 1) * (d - 2) / 2 {
                failures.push(format!("{d}Σ: genus {}", prof.genus_if_smooth));
            }
        }
        if !equivalent(&simplex::<i64>(5).interior_polygon(), &simplex(2)) {
            failures.push("interior of 5Σ is not 2Σ".into());
        }
        let verdicts = classify_interior_polygons(&self.enumerator, 6).expect("range");
        match verdicts
            .iter()
            .find(|v| is_plane_quintic_interior(&v.polygon_class.representative))
        {
            Some(v) if v.reason == Reason::PlaneQuinticRule => {}
            Some(v) => failures.push(format!("2Σ tagged {}", v.reason)),
            None => failures.push("2Σ missing from the classification".into()),
        }
        outcome(
            8,
            "plane-curve consistency",
            failures,
            "genus of dΣ for 3 <= d <= 12, 2Σ excluded by plane-quintic rule".into(),
        )
    }

    fn cross_validation(&self) -> Outcome {
        let mut failures = Vec::new();
        for n in 1..=5 {
            let fast: BTreeSet<_> = self
                .enumerator
                .by_lattice_points::<i64>(n)
                .expect("range")
                .into_iter()
                .map(|c| c.representative)
                .collect();
            let slow = naive_by_lattice_points(n as usize, NAIVE_POINTS_SIDE);
            if fast != slow {
                failures.push(format!("n={n}: {} vs {} classes", fast.len(), slow.len()));
            }
        }
        let fast: BTreeSet<_> = self.corpus()[0]
            .iter()
            .map(|c| c.representative.clone())
            .collect();
        let slow = naive_by_interior_points(1, NAIVE_INTERIOR_SIDE);
        if fast != slow {
            failures.push(format!("g=1: {} vs {} classes", fast.len(), slow.len()));
        }
        let mut checked = 0;
        for n in 3..=6 {
            for c in self.enumerator.by_lattice_points::<i64>(n).expect("range") {
                let p = &c.representative;
                if !p.is_full() {
                    continue;
                }
                checked += 1;
                let fast = realizable_as_interior(p);
                let slow = search_interior_witness(p, WITNESS_MARGIN, WITNESS_MAX_POINTS).is_some();
                if fast != slow {
                    failures.push(format!("{p}: relaxation {fast}, search {slow}"));
                }
            }
        }
        outcome(
            9,
            "enumerator cross-validation",
            failures,
            format!("n <= 5 and g = 1 agree; realizability agrees on {checked} polygons"),
        )
    }

    fn determinism(&self) -> Outcome {
        let render = |threads: usize| {
            let e = Enumerator::new().threads(threads);
            let report = full_report(&e, &ReportOptions::default()).expect("report");
            let lines: Vec<String> = e
                .by_interior_points::<i64>(10)
                .expect("range")
                .iter()
                .map(|c| c.to_json().to_string())
                .collect();
            (
                serde_json::to_string_pretty(&report.to_json()).unwrap(),
                report.figures_svg(),
                lines.join("\n"),
            )
        };
        let other = if self.threads == 1 { 4 } else { 1 };
        let a = render(self.threads);
        let b = render(self.threads);
        let c = render(other);
        let mut failures = Vec::new();
        if a != b {
            failures.push("two runs differ".into());
        }
        if a != c {
            failures.push(format!("threads {} and {other} differ", self.threads));
        }
        outcome(
            10,
            "determinism",
            failures,
            format!(
                "report, figures and enumeration identical across runs and threads {}/{other}",
                self.threads
            ),
        )
    }
}

/// Genera in `3..=LARGEG_MAX` where the stated pattern (holds exactly for
/// `g <= 12`) is broken.
pub fn largeg_deviations() -> Vec<i64> {
    verify_largeg(LARGEG_MAX)
        .expect("range")
        .into_iter()
        .filter(|(g, holds)| *holds != (*g <= 12))
        .map(|(g, _)| g)
        .collect()
}

fn largeg_crossover() -> Outcome {
    let deviations = largeg_deviations();
    let failures: Vec<String> = deviations
        .iter()
        .map(|&g| {
            format!(
                "g={g}: threshold {} > bound {}",
                min_degree_nonneg_rho(g, 1),
                gonality_bound_theorem(g).expect("g >= 3")
            )
        })
        .collect();
    let mut out = outcome(
        4,
        "large-genus crossover",
        failures,
        format!("holds for 3 <= g <= 12, fails for 13 <= g <= {LARGEG_MAX}"),
    );
    // g = 11 fails in exact arithmetic: 7 > sqrt(68/3) + 2 ≈ 6.76. Failure
    // for every g > 12 still holds.
    if deviations == [11] {
        out.known_failure =
            Some("inequality is false at g = 11 (7 > 6.76); false for all g > 12 as required");
    }
    out
}

fn rho_arithmetic() -> Outcome {
    let mut failures = Vec::new();
    let mut push = |s: String| {
        if failures.len() < 5 {
            failures.push(s)
        }
    };
    for g in 0..=20 {
        for d in 0..=(2 * g - 2).max(0) {
            for r in 0..=d {
                let h = DivisorHypothesis::new(g, d, r);
                if rho(&h) != rho(&serre_dual(&h)) {
                    push(format!("duality fails at {h:?}"));
                }
            }
        }
    }
    for g in 0..=6 {
        for d in 0..=(2 * g - 2).max(0) {
            for r in 1..=d {
                let h = DivisorHypothesis::new(g, d, r);
                if rho(&h) >= 0 {
                    continue;
                }
                match reduce_to_low_rank(&h) {
                    Ok(l) => {
                        let cap = if g < 5 { 1 } else { 2 };
                        if rho(&l) >= 0 || l.r < 1 || l.r > cap || l.g != g {
                            push(format!("reduction of {h:?} gave {l:?}"));
                        }
                    }
                    Err(e) => push(format!("reduction of {h:?} failed: {e}")),
                }
            }
        }
    }
    for g in 0..=100 {
        if min_degree_nonneg_rho(g, 1) != (g + 1) / 2 + 1 {
            push(format!("threshold at g={g}"));
        }
    }
    if rho(&DivisorHypothesis::new(5, 4, 2)) != -4 {
        push("ρ(5,4,2) != -4".into());
    }
    outcome(
        7,
        "ρ arithmetic",
        failures,
        "duality for g <= 20, reduction for g <= 6, thresholds for g <= 100, ρ(5,4,2) = -4".into(),
    )
}

/// Full-dimensional hulls of 3 to 8 random points in `[0, side]²`.
pub fn random_hulls(count: usize, side: i64, seed: u64) -> Vec<SmallPolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(3..=8);
        let pts: Vec<_> = (0..k)
            .map(|_| LatticePoint::new(rng.gen_range(0..=side), rng.gen_range(0..=side)))
            .collect();
        let hull = LatticePolygon::from_points(&pts);
        if hull.is_full() {
            out.push(hull);
        }
    }
    out
}
