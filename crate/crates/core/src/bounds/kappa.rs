//! Higher distance moments: disk versus Reuleaux triangle.
//!
//! For `κ = 1` the disk has the larger optimal mean (relative to diameter),
//! but a body whose enclosing disk is wider than its diameter eventually wins
//! as `κ` grows, because the disk's moment decays like `2/(κ + 2)`.

use serde::Serialize;

use super::generate::{generate, GeneratorKind, GeneratorSpec};
use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, Point};
use crate::moments::polygon_moment_with;
use crate::optimize::{nelder_mead, Stop};
use crate::quadrature::QuadratureConfig;

pub const DISK_SIDES: usize = 512;
pub const REULEAUX_SEGMENTS: usize = 128;
const SEED_GRID: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KappaComparison {
    pub kappa: f64,
    pub mu_disk: f64,
    pub mu_reuleaux: f64,
    pub disk_center: Point,
    pub reuleaux_center: Point,
}

/// `min_p μ^κ_P(p)`: coarse grid over the bounding box, then simplex descent.
pub fn min_moment(poly: &ConvexPolygon, kappa: f64) -> Result<(Point, f64)> {
    if !(kappa >= 1.0 && kappa.is_finite()) {
        return Err(Error::domain("kappa", format!("must be >= 1, got {kappa}")));
    }
    let cfg = QuadratureConfig {
        target_rel_error: 1e-9,
        max_subdivisions: 14,
    };
    let f = |p: Point| {
        polygon_moment_with(p, poly, kappa, &cfg)
            .map(|m| m.mean)
            .unwrap_or(f64::INFINITY)
    };
    let bb = poly.bbox();
    let cells = (SEED_GRID + 1) as f64;
    let mut best = (f64::INFINITY, bb.center());
    for i in 1..=SEED_GRID {
        for j in 1..=SEED_GRID {
            let p = Point::new(
                bb.min.x + bb.width() * i as f64 / cells,
                bb.min.y + bb.height() * j as f64 / cells,
            );
            if !poly.contains(p, 0.0) {
                continue;
            }
            let v = f(p);
            if v < best.0 {
                best = (v, p);
            }
        }
    }
    let out = nelder_mead(
        f,
        best.1,
        bb.scale() / cells,
        &Stop {
            x_tol: 1e-5 * bb.scale(),
            f_tol: 1e-10 * best.0.abs().max(1e-300),
            budget: 2_000,
        },
    );
    Ok(if out.value < best.0 {
        (out.best, out.value)
    } else {
        (best.1, best.0)
    })
}

pub fn comparison_bodies() -> Result<(ConvexPolygon, ConvexPolygon)> {
    let disk = generate(&GeneratorSpec::new(GeneratorKind::RegularNgon {
        n: DISK_SIDES,
    }))?;
    let reuleaux = generate(&GeneratorSpec::new(GeneratorKind::ReuleauxTriangle {
        segments: REULEAUX_SEGMENTS,
    }))?;
    Ok((disk, reuleaux))
}

pub fn kappa_comparison(kappa: f64) -> Result<KappaComparison> {
    let (disk, reuleaux) = comparison_bodies()?;
    let (disk_center, mu_disk) = min_moment(&disk, kappa)?;
    let (reuleaux_center, mu_reuleaux) = min_moment(&reuleaux, kappa)?;
    Ok(KappaComparison {
        kappa,
        mu_disk,
        mu_reuleaux,
        disk_center,
        reuleaux_center,
    })
}

/// First `κ` in `kappas` (taken in order) at which the disk's optimal moment
/// drops below the Reuleaux triangle's, with every comparison computed.
pub fn kappa_crossover(kappas: &[f64]) -> Result<(Option<f64>, Vec<KappaComparison>)> {
    let mut rows = Vec::with_capacity(kappas.len());
    let mut crossover = None;
    for &k in kappas {
        let row = kappa_comparison(k)?;
        if crossover.is_none() && row.mu_disk < row.mu_reuleaux {
            crossover = Some(k);
        }
        rows.push(row);
    }
    Ok((crossover, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_values() {
        let c = kappa_comparison(1.0).unwrap();
        assert!((c.mu_disk - 2.0 / 3.0).abs() < 1e-3);
        // at κ = 1 the disk is the worse body
        assert!(c.mu_disk > c.mu_reuleaux);
    }

    #[test]
    fn rejects_small_kappa() {
        assert!(kappa_comparison(0.5).is_err());
    }
}
