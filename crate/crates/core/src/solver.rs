//! Fermat-Weber centers: the minimizer of `p ↦ μ_P(p)`.
//!
//! `μ_P` is convex and 1-Lipschitz, and its minimizer lies in `P`. Three
//! routes are offered:
//!
//! * [`fw_center_exact`]: grid seeding plus simplex descent on the closed form.
//! * [`fw_center_grid`]: best point of a square grid whose spacing makes the
//!   result a `(1 + ε)`-approximation, using the lower bound `μ* > Δ/6`.
//! * [`fw_center_sed`]: center of the smallest enclosing disk, within a factor
//!   `12(4 − √3)/13` of optimal.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{diameter, smallest_enclosing_disk, ConvexPolygon, Point};
use crate::moments::mean_distance;
use crate::optimize::{nelder_mead, Stop};

pub const DEFAULT_BUDGET: usize = 100_000;
/// Default tolerance relative to the diameter.
pub const DEFAULT_REL_TOL: f64 = 1e-7;
const SEED_GRID: usize = 17;
const MAX_RESTARTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FwMethod {
    Exact,
    Grid,
    SedCenter,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FwResult {
    pub center: Point,
    pub mu_star: f64,
    pub method: FwMethod,
    pub evaluations: usize,
    /// Exact: final simplex size. Grid: additive certificate `δ/√2`.
    /// SedCenter: 0 (no tolerance involved).
    pub achieved_tol: f64,
}

pub fn default_tol(poly: &ConvexPolygon) -> f64 {
    DEFAULT_REL_TOL * diameter(poly).0
}

pub fn fw_center_exact(poly: &ConvexPolygon, tol: f64) -> Result<FwResult> {
    fw_center_exact_with_budget(poly, tol, DEFAULT_BUDGET)
}

pub fn fw_center_exact_with_budget(
    poly: &ConvexPolygon,
    tol: f64,
    budget: usize,
) -> Result<FwResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain("tol", "must be positive"));
    }
    let delta = diameter(poly).0;
    let bb = poly.bbox();
    let f = |p: Point| mean_distance(p, poly);

    let mut evaluations = 0usize;
    let mut best = (f64::INFINITY, bb.center());
    let cells = (SEED_GRID - 1) as f64;
    'seed: for i in 0..SEED_GRID {
        for j in 0..SEED_GRID {
            if evaluations >= budget {
                break 'seed;
            }
            let p = Point::new(
                bb.min.x + bb.width() * i as f64 / cells,
                bb.min.y + bb.height() * j as f64 / cells,
            );
            let v = f(p);
            evaluations += 1;
            if v < best.0 {
                best = (v, p);
            }
        }
    }

    let f_tol = tol * delta * 1e-3;
    let mut step = bb.scale() / cells;
    let mut size = f64::INFINITY;
    let mut converged = false;
    for _ in 0..MAX_RESTARTS {
        let remaining = budget.saturating_sub(evaluations);
        let out = nelder_mead(
            f,
            best.1,
            step,
            &Stop {
                x_tol: tol,
                f_tol,
                budget: remaining,
            },
        );
        evaluations += out.evaluations;
        let improved = best.0 - out.value;
        if out.value <= best.0 {
            best = (out.value, out.best);
        }
        size = out.size;
        if !out.converged {
            converged = false;
            break;
        }
        converged = true;
        // a restart that cannot improve confirms the minimum
        if improved <= f_tol {
            break;
        }
        step = (4.0 * tol).max(out.size * 10.0);
    }
    if !converged {
        return Err(Error::NonConvergence { evaluations, size });
    }
    Ok(FwResult {
        center: best.1,
        mu_star: best.0,
        method: FwMethod::Exact,
        evaluations,
        achieved_tol: size,
    })
}

/// Grid spacing giving a `(1 + eps)` guarantee: `eps·Δ/(6√2)`.
pub fn grid_spacing(delta: f64, eps: f64) -> f64 {
    eps * delta / (6.0 * std::f64::consts::SQRT_2)
}

pub fn fw_center_grid(poly: &ConvexPolygon, eps: f64) -> Result<FwResult> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::domain(
            "eps",
            format!("must lie in (0, 1], got {eps}"),
        ));
    }
    let delta = diameter(poly).0;
    let spacing = grid_spacing(delta, eps);
    grid_search(poly, spacing).or_else(|_| grid_search(poly, 0.5 * spacing))
}

// Candidates are the grid points inside P plus the projections onto P of grid
// points within one spacing of it. Projection is non-expansive, so the FW
// center always has a candidate within spacing/√2.
fn grid_search(poly: &ConvexPolygon, spacing: f64) -> Result<FwResult> {
    let bb = poly.bbox();
    let c = bb.center();
    let nx = ((0.5 * bb.width()) / spacing).ceil() as i64 + 1;
    let ny = ((0.5 * bb.height()) / spacing).ceil() as i64 + 1;
    let mut candidates: Vec<Point> = Vec::with_capacity(((2 * nx + 1) * (2 * ny + 1)) as usize);
    for i in -nx..=nx {
        for j in -ny..=ny {
            let g = c + Point::new(i as f64 * spacing, j as f64 * spacing);
            let q = poly.project(g);
            if q.dist(g) <= spacing {
                candidates.push(q);
            }
        }
    }
    candidates.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    candidates.dedup();
    if candidates.is_empty() {
        return Err(Error::EmptyGrid(spacing));
    }
    let evaluations = candidates.len();
    let (mu, center) = candidates
        .par_iter()
        .map(|&q| (mean_distance(q, poly), q))
        .reduce_with(|a, b| if lex_less(&b, &a) { b } else { a })
        .expect("non-empty candidate set");
    Ok(FwResult {
        center,
        mu_star: mu,
        method: FwMethod::Grid,
        evaluations,
        achieved_tol: spacing / std::f64::consts::SQRT_2,
    })
}

// total order on (value, x, y) so the parallel argmin is schedule-independent
fn lex_less(a: &(f64, Point), b: &(f64, Point)) -> bool {
    a.0.total_cmp(&b.0)
        .then(a.1.x.total_cmp(&b.1.x))
        .then(a.1.y.total_cmp(&b.1.y))
        .is_lt()
}

pub fn fw_center_sed(poly: &ConvexPolygon) -> FwResult {
    let disk = smallest_enclosing_disk(poly);
    FwResult {
        center: disk.center,
        mu_star: mean_distance(disk.center, poly),
        method: FwMethod::SedCenter,
        evaluations: 1,
        achieved_tol: 0.0,
    }
}

/// `μ*_P / Δ(P)`.
pub fn ratio(poly: &ConvexPolygon, tol: f64) -> Result<f64> {
    let fw = fw_center_exact(poly, tol)?;
    Ok(fw.mu_star / diameter(poly).0)
}
