use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use polybn_core::acceptance::Suite;
use polybn_core::analysis::{analyze, AnalysisError, Input};
use polybn_core::classification::{full_report, ClassifyError, ReportOptions};
use polybn_core::enumeration::{Enumerator, PolygonClass};
use polybn_core::error::EnumerationError;
use polybn_core::json as pjson;
use polybn_core::lattice::normal_form;

const POLY_HELP: &str = "\
Laurent polynomial in x and y, e.g. \"1 + x + x*y + 3/2 x^-2 y^-1\".
Terms: [sign] [rational coefficient] ['*'] factors; factors are x or y with
optional '^' or '**' and a signed integer exponent; whitespace is ignored.";

const POLYGON_HELP: &str = "\
Lattice points \"x,y x,y ...\"; the polygon is their convex hull.";

#[derive(Parser)]
#[command(
    name = "polybn",
    version,
    about = "Newton polygons, lattice width and Brill–Noether arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Threads {
    /// Worker threads for enumeration (0 = one per core)
    #[arg(long, env = "POLYBN_THREADS", default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the Newton polygon of a polynomial or an explicit polygon
    Analyze {
        #[arg(long, help = POLY_HELP, conflicts_with = "polygon", required_unless_present = "polygon")]
        poly: Option<String>,
        #[arg(long, help = POLYGON_HELP)]
        polygon: Option<String>,
        /// Human-readable output instead of JSON
        #[arg(long)]
        pretty: bool,
    },
    /// Stream polygon classes as JSON lines
    Enumerate {
        /// Polygons with exactly this many interior points (1..=12)
        #[arg(long, conflicts_with = "points", required_unless_present = "points")]
        interior: Option<i64>,
        /// Polygons with exactly this many lattice points (1..=16)
        #[arg(long)]
        points: Option<i64>,
        /// Stop after this many lines
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        threads: Threads,
    },
    /// Write report.json and figures.svg for the full classification
    Classify {
        /// Output directory (created if missing)
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Largest genus for the admissible-class table (1..=6)
        #[arg(long, default_value_t = 6)]
        max_genus: i64,
        #[command(flatten)]
        threads: Threads,
    },
    /// Run the acceptance checks
    Selftest {
        /// Run a single criterion (1..=10)
        #[arg(long)]
        criterion: Option<u8>,
        /// Plain text lines instead of JSON
        #[arg(long)]
        pretty: bool,
        #[command(flatten)]
        threads: Threads,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::new(5, e)
}

fn enumeration_failure(e: EnumerationError) -> Failure {
    match e {
        EnumerationError::UnsupportedRange { .. } => Failure::new(4, e),
        _ => Failure::new(1, e),
    }
}

fn emit_json(out: &mut impl Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json")).map_err(io_failure)
}

fn cmd_analyze(poly: Option<String>, polygon: Option<String>, pretty: bool) -> Result<(), Failure> {
    let input = match (poly, polygon) {
        (Some(p), None) => Input::Poly(p),
        (None, Some(p)) => Input::Polygon(p),
        _ => {
            return Err(Failure::new(
                2,
                "exactly one of --poly or --polygon is required",
            ))
        }
    };
    let report = analyze(input).map_err(|e| match e {
        AnalysisError::Parse(_) | AnalysisError::Polygon(_) => Failure::new(2, e),
        AnalysisError::Degenerate(_) => Failure::new(3, e),
    })?;
    let mut out = io::stdout().lock();
    if pretty {
        out.write_all(report.to_text().as_bytes())
            .map_err(io_failure)
    } else {
        emit_json(&mut out, &report.to_json())
    }
}

fn enumerate_line(class: &PolygonClass<i64>, with_interior: bool) -> Value {
    let mut v = class.to_json();
    if with_interior {
        let inner = normal_form(&class.representative.interior_polygon());
        v.as_object_mut()
            .unwrap()
            .insert("interior_vertices".into(), pjson::vertices(&inner));
    }
    v
}

fn cmd_enumerate(
    interior: Option<i64>,
    points: Option<i64>,
    limit: Option<usize>,
    threads: usize,
) -> Result<(), Failure> {
    let e = Enumerator::new().threads(threads);
    let classes = match (interior, points) {
        (Some(g), None) => e.by_interior_points::<i64>(g),
        (None, Some(n)) => e.by_lattice_points::<i64>(n),
        _ => {
            return Err(Failure::new(
                2,
                "exactly one of --interior or --points is required",
            ))
        }
    }
    .map_err(enumeration_failure)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for class in classes.iter().take(limit.unwrap_or(usize::MAX)) {
        writeln!(out, "{}", enumerate_line(class, interior.is_some())).map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)
}

fn cmd_classify(out_dir: PathBuf, max_genus: i64, threads: usize) -> Result<(), Failure> {
    let e = Enumerator::new().threads(threads);
    let options = ReportOptions {
        max_genus,
        ..ReportOptions::default()
    };
    let report = full_report(&e, &options).map_err(|err| match err {
        ClassifyError::Range { .. } => Failure::new(4, err),
        ClassifyError::Enumeration(inner) => enumeration_failure(inner),
    })?;
    fs::create_dir_all(&out_dir).map_err(io_failure)?;
    let report_path = out_dir.join("report.json");
    let figures_path = out_dir.join("figures.svg");
    let text = serde_json::to_string_pretty(&report.to_json()).expect("json") + "\n";
    fs::write(&report_path, text).map_err(io_failure)?;
    let panels = report.figure_panels();
    fs::write(&figures_path, polybn_core::svg::render_sheet(&panels)).map_err(io_failure)?;
    let summary = json!({
        "report": report_path.display().to_string(),
        "figures": figures_path.display().to_string(),
        "admissible": report.admissible().count(),
        "drawings": panels.len(),
    });
    emit_json(&mut io::stdout().lock(), &summary)
}

fn cmd_selftest(criterion: Option<u8>, pretty: bool, threads: usize) -> Result<(), Failure> {
    let ids: Vec<u8> = match criterion {
        Some(id @ 1..=10) => vec![id],
        Some(id) => return Err(Failure::new(4, format!("criterion {id} is outside 1..=10"))),
        None => (1..=10).collect(),
    };
    let suite = Suite::new(threads);
    let mut out = io::stdout().lock();
    let mut ok = true;
    for id in ids {
        let o = suite.run(id);
        ok &= o.acceptable();
        let line = if pretty {
            o.to_string()
        } else {
            json!({
                "criterion": o.id,
                "name": o.name,
                "passed": o.passed,
                "known_failure": o.known_failure,
                "detail": o.detail,
            })
            .to_string()
        };
        writeln!(out, "{line}").map_err(io_failure)?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::new(1, "acceptance checks failed"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            poly,
            polygon,
            pretty,
        } => cmd_analyze(poly, polygon, pretty),
        Command::Enumerate {
            interior,
            points,
            limit,
            threads,
        } => cmd_enumerate(interior, points, limit, threads.threads),
        Command::Classify {
            out,
            max_genus,
            threads,
        } => cmd_classify(out, max_genus, threads.threads),
        Command::Selftest {
            criterion,
            pretty,
            threads,
        } => cmd_selftest(criterion, pretty, threads.threads),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("polybn: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
