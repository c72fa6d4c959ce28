//! `fwkit`: Fermat-Weber centers, distance moments and bound sweeps from the shell.
//!
//! Exit codes: 0 success, 1 malformed input, 2 infeasible configuration,
//! 3 solver non-convergence. Errors go to stderr as one JSON line.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fwkit::bounds::report::{sweep, verify_bounds_with, BoundReport, SweepKind, VerifyOptions};
use fwkit::bounds::{bound_constants, improved_constants};
use fwkit::io::read_polygon;
use fwkit::solver::{default_tol, fw_center_exact_with_budget, DEFAULT_BUDGET};
use fwkit::symmetrize::{double_symmetrize, steiner_symmetrize, Axis};
use fwkit::{diameter, fw_center_grid, fw_center_sed, polygon_moment, ConvexPolygon, Error, Point};

#[derive(Parser)]
#[command(
    name = "fwkit",
    version,
    about = "Average distances and Fermat-Weber centers of convex polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Grid,
    Sed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rhombus,
    RegularNgon,
    RandomHull,
    RandomSymmetric,
    Reuleaux,
    ThinRectangle,
}

impl From<Kind> for SweepKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Rhombus => SweepKind::Rhombus,
            Kind::RegularNgon => SweepKind::RegularNgon,
            Kind::RandomHull => SweepKind::RandomHull,
            Kind::RandomSymmetric => SweepKind::RandomSymmetric,
            Kind::Reuleaux => SweepKind::Reuleaux,
            Kind::ThinRectangle => SweepKind::ThinRectangle,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Polygon file: {"vertices": [[x, y], ...]}.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Locate the Fermat-Weber center.
    FwCenter {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Grid approximation factor, in (0, 1].
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Solver tolerance; defaults to 1e-7 times the diameter.
        #[arg(long)]
        tol: Option<f64>,
        /// Objective evaluation budget of the exact solver.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Fermat-Weber value over diameter.
    Ratio {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Distance moment of order kappa seen from a point.
    Moments {
        #[command(flatten)]
        input: Input,
        /// Query point as "x,y".
        #[arg(long, value_parser = parse_point)]
        point: Point,
        #[arg(long, default_value_t = 1.0)]
        kappa: f64,
    },
    /// Steiner symmetrization about an axis, or double symmetrization without one.
    Symmetrize {
        #[command(flatten)]
        input: Input,
        /// Axis as "px,py,dx,dy": a point on it and its direction.
        #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
        axis: Option<(Point, Point)>,
    },
    /// Check the average-distance inequalities on one body.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Slack allowed on each check.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check the inequalities over a family of generated bodies.
    Sweep {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex or point count; random kinds cycle through 3..=40 when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print the named constants.
    Constants,
}

fn parse_floats<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut out = [0.0f64; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| format!("'{p}' is not a number"))?;
        if !o.is_finite() {
            return Err(format!("'{p}' is not finite"));
        }
    }
    Ok(out)
}

fn parse_point(s: &str) -> Result<Point, String> {
    parse_floats::<2>(s).map(|[x, y]| Point::new(x, y))
}

fn parse_axis(s: &str) -> Result<(Point, Point), String> {
    parse_floats::<4>(s).map(|[px, py, dx, dy]| (Point::new(px, py), Point::new(dx, dy)))
}

struct Failure {
    code: u8,
    kind: &'static str,
    detail: String,
}

impl Failure {
    fn parse(detail: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind: "parse",
            detail: detail.into(),
        }
    }

    fn infeasible(detail: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "infeasible",
            detail: detail.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::parse(e.to_string()),
            Error::NonFinite(_)
            | Error::TooFewVertices(_)
            | Error::AllCollinear
            | Error::NotConvex(_)
            | Error::ZeroArea => Failure::parse(format!("vertices: {e}")),
            Error::NonConvergence { .. } => Failure {
                code: 3,
                kind: "non_convergence",
                detail: e.to_string(),
            },
            _ => Failure::infeasible(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn positive(field: &str, v: f64) -> Outcome<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Failure::infeasible(format!(
            "{field}: must be positive, got {v}"
        )))
    }
}

fn load(input: &Input) -> Outcome<ConvexPolygon> {
    read_polygon(&input.input).map_err(|e| match e {
        Error::Parse(m) => Failure::parse(format!("input: {m}")),
        other => other.into(),
    })
}

fn solver_tol(poly: &ConvexPolygon, tol: Option<f64>) -> Outcome<f64> {
    tol.map_or_else(|| Ok(default_tol(poly)), |t| positive("tol", t))
}

#[derive(Serialize)]
struct RatioReport {
    delta: f64,
    mu_star: f64,
    ratio: f64,
}

enum Report {
    Json(String),
    Table(Vec<BoundReport>),
}

fn json<T: Serialize>(v: &T) -> Report {
    Report::Json(serde_json::to_string_pretty(v).expect("reports serialize"))
}

fn run(cli: &Cli) -> Outcome<Report> {
    let csv_ok = matches!(cli.command, Command::Verify { .. } | Command::Sweep { .. });
    if cli.format == Format::Csv && !csv_ok {
        return Err(Failure::infeasible(
            "format: csv output is available for verify and sweep only",
        ));
    }
    match &cli.command {
        Command::FwCenter {
            input,
            method,
            eps,
            tol,
            budget,
        } => {
            if matches!(method, Method::Grid) && !(*eps > 0.0 && *eps <= 1.0) {
                return Err(Failure::infeasible(format!(
                    "eps: must lie in (0, 1], got {eps}"
                )));
            }
            let poly = load(input)?;
            let res = match method {
                Method::Exact => {
                    fw_center_exact_with_budget(&poly, solver_tol(&poly, *tol)?, *budget)?
                }
                Method::Grid => fw_center_grid(&poly, *eps)?,
                Method::Sed => fw_center_sed(&poly),
            };
            Ok(json(&res))
        }
        Command::Ratio { input, tol, budget } => {
            let poly = load(input)?;
            let fw = fw_center_exact_with_budget(&poly, solver_tol(&poly, *tol)?, *budget)?;
            let delta = diameter(&poly).0;
            Ok(json(&RatioReport {
                delta,
                mu_star: fw.mu_star,
                ratio: fw.mu_star / delta,
            }))
        }
        Command::Moments {
            input,
            point,
            kappa,
        } => {
            if !(*kappa >= 1.0 && kappa.is_finite()) {
                return Err(Failure::infeasible(format!(
                    "kappa: must be >= 1, got {kappa}"
                )));
            }
            let poly = load(input)?;
            Ok(json(&polygon_moment(*point, &poly, *kappa)?))
        }
        Command::Symmetrize { input, axis } => {
            let poly = load(input)?;
            let out = match axis {
                Some((p, d)) => {
                    let axis = Axis::new(*p, *d)
                        .map_err(|_| Failure::infeasible("axis: direction must be nonzero"))?;
                    steiner_symmetrize(&poly, &axis)
                }
                None => double_symmetrize(&poly),
            };
            Ok(json(&out))
        }
        Command::Verify { input, tol } => {
            let tol = positive("tol", *tol)?;
            let poly = load(input)?;
            let name = input
                .input
                .file_stem()
                .map_or("body".into(), |s| s.to_string_lossy().into_owned());
            let opts = VerifyOptions {
                tol,
                solver_tol: None,
            };
            let report = verify_bounds_with(&name, &poly, &opts)?;
            Ok(match cli.format {
                Format::Json => json(&report),
                Format::Csv => Report::Table(vec![report]),
            })
        }
        Command::Sweep {
            kind,
            count,
            seed,
            n,
            tol,
        } => {
            let tol = positive("tol", *tol)?;
            if *count == 0 {
                return Err(Failure::infeasible("count: must be at least 1"));
            }
            let reports = sweep((*kind).into(), *count, *seed, *n, tol)?;
            Ok(match cli.format {
                Format::Json => json(&reports),
                Format::Csv => Report::Table(reports),
            })
        }
        Command::Constants => {
            let mut all: BTreeMap<&str, f64> = improved_constants();
            all.extend(bound_constants());
            Ok(json(&all))
        }
    }
}

fn render(report: &Report) -> Outcome<Vec<u8>> {
    match report {
        Report::Json(s) => Ok(format!("{s}\n").into_bytes()),
        Report::Table(rows) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "body_id",
                "delta",
                "R",
                "mu_star",
                "ratio",
                "symmetric",
                "worst_margin",
            ])
            .and_then(|_| {
                rows.iter().try_for_each(|r| {
                    w.write_record([
                        r.body_id.clone(),
                        r.delta.to_string(),
                        r.r.to_string(),
                        r.mu_star.to_string(),
                        r.ratio.to_string(),
                        r.symmetric.to_string(),
                        r.worst_margin().to_string(),
                    ])
                })
            })
            .map_err(|e| Failure::infeasible(format!("output: {e}")))?;
            w.into_inner()
                .map_err(|e| Failure::infeasible(format!("output: {e}")))
        }
    }
}

fn emit(bytes: &[u8], path: Option<&Path>) -> Outcome<()> {
    let res = match path {
        Some(p) => std::fs::write(p, bytes),
        None => std::io::stdout().lock().write_all(bytes),
    };
    res.map_err(|e| Failure::infeasible(format!("output: {e}")))
}

fn configure_threads() -> Outcome<()> {
    let Ok(raw) = std::env::var("FWKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::infeasible(format!(
            "FWKIT_THREADS: must be a positive integer, got '{raw}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::infeasible(format!("FWKIT_THREADS: {e}")))
}

fn fail(f: Failure) -> ExitCode {
    let line = serde_json::json!({ "error": f.kind, "detail": f.detail });
    eprintln!("{line}");
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            // first line carries the offending argument
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            return fail(Failure::parse(first));
        }
    };
    let result = configure_threads()
        .and_then(|_| run(&cli))
        .and_then(|r| render(&r))
        .and_then(|b| emit(&b, cli.output.as_deref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}
