//! The double-sector bound behind the upper estimate on `μ*/Δ`.
//!
//! For a wedge pair with radii `x ≥ y` around the enclosing-disk center, the
//! mean distance is at most `f(x, y) = (2/3)(x³ + y³)/(x² + y²)`. The
//! feasible region for a body of diameter `D` and enclosing radius `R` is
//!
//! ```text
//! √(R² − D²/4) ≤ y ≤ x ≤ R ≤ D/√3,   x + y ≤ D.
//! ```
//!
//! The maximum of `f` over it is `2(4 − √3)/13 · D`, attained at
//! `x = D/√3`, `y = D − x`.

use serde::Serialize;

use crate::error::{Error, Result};

/// `2(4 − √3)/13`, the upper constant for `μ*/Δ`.
pub fn upper_constant() -> f64 {
    2.0 * (4.0 - 3f64.sqrt()) / 13.0
}

/// `√3/5`, the maximum along the `y = √(R² − D²/4)` branch (per unit `D`).
pub fn y1_branch_constant() -> f64 {
    3f64.sqrt() / 5.0
}

/// `12(4 − √3)/13`, the approximation factor of the enclosing-disk center.
pub fn sed_ratio_constant() -> f64 {
    12.0 * (4.0 - 3f64.sqrt()) / 13.0
}

pub fn sector_bound_f(x: f64, y: f64) -> Result<f64> {
    if !(x >= 0.0 && y >= 0.0) || (x == 0.0 && y == 0.0) || !(x.is_finite() && y.is_finite()) {
        return Err(Error::domain(
            "x, y",
            format!("need x, y ≥ 0, not both zero; got ({x}, {y})"),
        ));
    }
    Ok(2.0 / 3.0 * (x.powi(3) + y.powi(3)) / (x * x + y * y))
}

/// `f` on the line `x + y = D` as a function of `w = xy`.
pub fn h1(w: f64, d: f64) -> f64 {
    2.0 / 3.0 * (3.0 * d * w - d.powi(3)) / (2.0 * w - d * d)
}

/// Range of `w = xy` over the feasible part of `x + y = D`.
pub fn h1_domain(d: f64) -> (f64, f64) {
    let x = d / 3f64.sqrt();
    (x * (d - x), 0.25 * d * d)
}

/// `f(R, √(R² − D²/4))`.
pub fn h2(r: f64, d: f64) -> f64 {
    let y = (r * r - 0.25 * d * d).max(0.0).sqrt();
    2.0 / 3.0 * (r.powi(3) + y.powi(3)) / (r * r + y * y)
}

/// Sign factor of `h2'`: `(1 + z)³ − 2 − 2z³`.
pub fn h3(z: f64) -> f64 {
    (1.0 + z).powi(3) - 2.0 - 2.0 * z.powi(3)
}

/// `z = y/x` at `R = 3(4 − √3)/13 · D`, past which `h3` stays positive.
pub fn h3_threshold() -> f64 {
    let k = 13.0 / (3.0 * (4.0 - 3f64.sqrt()));
    (1.0 - 0.25 * k * k).sqrt()
}

/// Real root of `z³ + 3z − 2` by bisection on `[0, 1]`.
pub fn cubic_root_z0() -> f64 {
    let g = |z: f64| z * z * z + 3.0 * z - 2.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Cardano's form `(√2 + 1)^{1/3} − (√2 − 1)^{1/3}`.
pub fn cubic_root_z0_closed_form() -> f64 {
    (2f64.sqrt() + 1.0).cbrt() - (2f64.sqrt() - 1.0).cbrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorPoint {
    pub x: f64,
    pub y: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorMaximum {
    pub max_val: f64,
    pub argmax: SectorPoint,
    /// Best point with `y` pinned to `√(R² − D²/4)`.
    pub y1_branch: SectorPoint,
    /// Best point with `y = D − x`.
    pub y2_branch: SectorPoint,
    /// Brute-force maximum over a full `(R, x, y)` grid.
    pub grid3d_max: f64,
    pub grid3d_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Y1,
    Y2,
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 { (b - a) / (n - 1) as f64 } else { 0.0 };
    (0..n).map(move |i| if i + 1 == n { b } else { a + step * i as f64 })
}

fn keep_best(best: &mut Option<SectorPoint>, cand: SectorPoint) {
    if best.is_none_or(|b| cand.value > b.value) {
        *best = Some(cand);
    }
}

/// Maximum of `f` along one extreme-`y` branch, gridding `R` and `x`.
pub fn maximize_branch(d: f64, grid_n: usize, branch: Branch) -> Option<SectorPoint> {
    let mut best = None;
    for r in linspace(0.5 * d, d / 3f64.sqrt(), grid_n) {
        let y1 = (r * r - 0.25 * d * d).max(0.0).sqrt();
        match branch {
            Branch::Y1 => {
                for x in linspace(y1, r, grid_n) {
                    if let Ok(value) = sector_bound_f(x, y1) {
                        keep_best(&mut best, SectorPoint { x, y: y1, r, value });
                    }
                }
            }
            Branch::Y2 => {
                let (lo, hi) = (0.5 * d, r.min(d - y1));
                if lo > hi {
                    continue;
                }
                for x in linspace(lo, hi, grid_n) {
                    let y = d - x;
                    if let Ok(value) = sector_bound_f(x, y) {
                        keep_best(&mut best, SectorPoint { x, y, r, value });
                    }
                }
            }
        }
    }
    best
}

fn grid3d(d: f64, n: usize) -> f64 {
    let mut best = 0.0f64;
    for r in linspace(0.5 * d, d / 3f64.sqrt(), n) {
        let y1 = (r * r - 0.25 * d * d).max(0.0).sqrt();
        for x in linspace(y1, r, n) {
            let y_hi = x.min(d - x);
            if y_hi < y1 {
                continue;
            }
            for y in linspace(y1, y_hi, n) {
                if let Ok(v) = sector_bound_f(x, y) {
                    best = best.max(v);
                }
            }
        }
    }
    best
}

/// Largest 3D cross-check resolution (the full grid is cubic in it).
pub const GRID3D_MAX_N: usize = 160;

pub fn maximize_sector_bound(d: f64, grid_n: usize) -> Result<SectorMaximum> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain("D", "must be positive"));
    }
    if grid_n < 100 {
        return Err(Error::domain(
            "grid_n",
            format!("must be at least 100, got {grid_n}"),
        ));
    }
    let y1 = maximize_branch(d, grid_n, Branch::Y1).expect("y1 branch is never empty");
    let y2 = maximize_branch(d, grid_n, Branch::Y2).expect("y2 branch is never empty");
    let argmax = if y2.value >= y1.value { y2 } else { y1 };
    let n3 = grid_n.min(GRID3D_MAX_N);
    Ok(SectorMaximum {
        max_val: argmax.value,
        argmax,
        y1_branch: y1,
        y2_branch: y2,
        grid3d_max: grid3d(d, n3),
        grid3d_n: n3,
    })
}
