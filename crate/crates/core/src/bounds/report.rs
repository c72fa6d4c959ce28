use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{generate, ladder, GeneratorKind, GeneratorSpec, RNG_ALGORITHM};
use super::sector::{sed_ratio_constant, upper_constant};
use crate::error::{Error, Result};
use crate::geometry::{central_symmetry_center, diameter, smallest_enclosing_disk, ConvexPolygon};
use crate::moments::mean_distance;
use crate::solver::{default_tol, fw_center_exact};

pub const CHECK_LOWER: &str = "lower_bound";
pub const CHECK_UPPER: &str = "upper_bound";
pub const CHECK_SYMMETRIC: &str = "symmetric_upper_bound";
pub const CHECK_JUNG_LOWER: &str = "jung_lower";
pub const CHECK_JUNG_UPPER: &str = "jung_upper";
pub const CHECK_SED: &str = "sed_ratio";

/// Outcome of one inequality. `margin` is the raw slack to the bound
/// (negative means the bound itself is violated); `pass` allows the
/// verification tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub pass: bool,
    pub margin: f64,
}

impl Check {
    fn new(margin: f64, tol: f64) -> Self {
        Check {
            pass: margin > -tol,
            margin,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub body_id: String,
    pub delta: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub mu_star: f64,
    pub ratio: f64,
    pub symmetric: bool,
    /// `μ_P(enclosing-disk center) / μ*_P`.
    pub sed_ratio: f64,
    pub checks: BTreeMap<String, Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn worst_margin(&self) -> f64 {
        self.checks
            .values()
            .map(|c| c.margin)
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Slack allowed on every check.
    pub tol: f64,
    /// Fermat-Weber solver tolerance; `None` means `1e-7·Δ`.
    pub solver_tol: Option<f64>,
}

pub fn verify_bounds(poly: &ConvexPolygon, tol: f64) -> Result<BoundReport> {
    verify_bounds_with(
        "body",
        poly,
        &VerifyOptions {
            tol,
            solver_tol: None,
        },
    )
}

pub fn verify_bounds_with(
    body_id: &str,
    poly: &ConvexPolygon,
    opts: &VerifyOptions,
) -> Result<BoundReport> {
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(Error::domain("tol", "must be positive"));
    }
    let (delta, _, _) = diameter(poly);
    let disk = smallest_enclosing_disk(poly);
    let solver_tol = opts.solver_tol.unwrap_or_else(|| default_tol(poly));
    let fw = fw_center_exact(poly, solver_tol)?;
    let ratio = fw.mu_star / delta;
    let symmetric = central_symmetry_center(poly, 1e-9 * delta).is_some();
    let sed_ratio = mean_distance(disk.center, poly) / fw.mu_star;

    let tol = opts.tol;
    let mut checks = BTreeMap::new();
    checks.insert(CHECK_LOWER.to_string(), Check::new(ratio - 1.0 / 6.0, tol));
    checks.insert(
        CHECK_UPPER.to_string(),
        Check::new(upper_constant() - ratio, tol),
    );
    if symmetric {
        checks.insert(
            CHECK_SYMMETRIC.to_string(),
            Check::new(1.0 / 3.0 - ratio, tol),
        );
    }
    checks.insert(
        CHECK_JUNG_LOWER.to_string(),
        Check::new(disk.radius - 0.5 * delta, tol),
    );
    checks.insert(
        CHECK_JUNG_UPPER.to_string(),
        Check::new(delta / 3f64.sqrt() - disk.radius, tol),
    );
    checks.insert(
        CHECK_SED.to_string(),
        Check::new(sed_ratio_constant() - sed_ratio, tol),
    );

    Ok(BoundReport {
        body_id: body_id.to_string(),
        delta,
        r: disk.radius,
        mu_star: fw.mu_star,
        ratio,
        symmetric,
        sed_ratio,
        checks,
        generator: None,
        rng: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    Rhombus,
    RegularNgon,
    RandomHull,
    RandomSymmetric,
    Reuleaux,
    ThinRectangle,
}

impl SweepKind {
    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Rhombus => "rhombus",
            SweepKind::RegularNgon => "regular-ngon",
            SweepKind::RandomHull => "random-hull",
            SweepKind::RandomSymmetric => "random-symmetric",
            SweepKind::Reuleaux => "reuleaux",
            SweepKind::ThinRectangle => "thin-rectangle",
        }
    }
}

/// The `i`-th body of a sweep.
///
/// Rhombi and rectangles walk the ladder 0.5, 0.2, 0.1, 0.05, …; polygons grow
/// their vertex count; random bodies use seed `seed + i` with `n` points
/// (or, when `n` is `None`, a count cycling through 3..=40).
pub fn sweep_spec(kind: SweepKind, i: usize, seed: u64, n: Option<usize>) -> GeneratorSpec {
    let cycling = n.unwrap_or(3 + i % 38);
    let kind = match kind {
        SweepKind::Rhombus => GeneratorKind::Rhombus { eps: ladder(i) },
        SweepKind::ThinRectangle => GeneratorKind::ThinRectangle { h: ladder(i) },
        SweepKind::RegularNgon => GeneratorKind::RegularNgon {
            n: n.map_or(3 + i, |n| n + i),
        },
        SweepKind::Reuleaux => GeneratorKind::ReuleauxTriangle {
            segments: n.map_or(2 + i, |n| n + i),
        },
        SweepKind::RandomHull => GeneratorKind::RandomHull {
            n: cycling,
            seed: seed.wrapping_add(i as u64),
        },
        SweepKind::RandomSymmetric => GeneratorKind::RandomSymmetric {
            n: cycling,
            seed: seed.wrapping_add(i as u64),
        },
    };
    GeneratorSpec::new(kind)
}

/// Reports for `count` bodies, in body order regardless of scheduling.
pub fn sweep(
    kind: SweepKind,
    count: usize,
    seed: u64,
    n: Option<usize>,
    tol: f64,
) -> Result<Vec<BoundReport>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let spec = sweep_spec(kind, i, seed, n);
            let poly = generate(&spec)?;
            let id = format!("{}-{:05}", kind.name(), i);
            let mut report = verify_bounds_with(
                &id,
                &poly,
                &VerifyOptions {
                    tol,
                    solver_tol: None,
                },
            )?;
            report.rng = spec.is_random().then(|| RNG_ALGORITHM.to_string());
            report.generator = Some(spec);
            Ok(report)
        })
        .collect()
}
