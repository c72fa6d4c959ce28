//! Distance moments `∫_Q |pq|^κ dq` and the mean distance `μ_Q(p)`.
//!
//! For κ = 1 the integral is exact. Translating `p` to the origin, the
//! triangle spanned by the origin and a directed edge `ab` at distance `h`
//! from the origin has
//!
//! ```text
//! ∫ |q| dq = (1/6) [ h·s·r(s) + h³·asinh(s/h) ]  from s_a to s_b,
//! ```
//!
//! where `s` is arc length along the edge line measured from the foot of the
//! perpendicular and `r(s) = √(h² + s²)`. Summing these with the sign of
//! `cross(a, b)` over the boundary gives the integral over the polygon for any
//! position of `p` (this is the signed fan triangulation with apex `p`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{orient, BoundingBox, ConvexPolygon, Point};
use crate::quadrature::{integrate_apex_power, QuadratureConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MomentMethod {
    ClosedForm,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentResult {
    pub integral: f64,
    pub area: f64,
    pub mean: f64,
    pub kappa: f64,
    pub method: MomentMethod,
}

/// Signed `∫ |q| dq` over the triangle `(0, a, b)`.
pub fn apex_edge_integral(a: Point, b: Point) -> f64 {
    let e = b - a;
    let len = e.norm();
    if len == 0.0 {
        return 0.0;
    }
    let cr = a.cross(b);
    if cr == 0.0 {
        return 0.0;
    }
    let u = e * (1.0 / len);
    let h = cr.abs() / len;
    let sa = a.dot(u);
    let sb = b.dot(u);
    let prim = |s: f64, r: f64| {
        // h³·asinh(s/h) → 0 as h → 0; clamp keeps s/h finite
        let hh = h.max(1e-300);
        h * s * r + h * h * h * (s / hh).asinh()
    };
    let val = (prim(sb, b.norm()) - prim(sa, a.norm())) / 6.0;
    val.abs().copysign(cr)
}

/// Exact `∫_t |pq| dq` over a non-degenerate triangle (either orientation).
pub fn triangle_distance_integral(p: Point, t: [Point; 3]) -> Result<f64> {
    let scale = BoundingBox::of(&t).scale();
    let area = 0.5 * orient(t[0], t[1], t[2]);
    if !(area.abs() >= 1e-14 * scale * scale) || !(scale > 0.0) {
        return Err(Error::DegenerateTriangle(area.abs()));
    }
    let [a, b, c] = t.map(|v| v - p);
    let sum = apex_edge_integral(a, b) + apex_edge_integral(b, c) + apex_edge_integral(c, a);
    Ok(sum.abs())
}

/// Exact `∫_P |pq| dq`.
pub fn distance_integral(p: Point, poly: &ConvexPolygon) -> f64 {
    poly.edges()
        .map(|(a, b)| apex_edge_integral(a - p, b - p))
        .sum::<f64>()
        .max(0.0)
}

/// `μ_P(p)`, the mean distance from `p` to the points of `P`.
pub fn mean_distance(p: Point, poly: &ConvexPolygon) -> f64 {
    distance_integral(p, poly) / poly.area()
}

/// Moment of order `kappa` with the default quadrature configuration.
pub fn polygon_moment(p: Point, poly: &ConvexPolygon, kappa: f64) -> Result<MomentResult> {
    polygon_moment_with(p, poly, kappa, &QuadratureConfig::default())
}

pub fn polygon_moment_with(
    p: Point,
    poly: &ConvexPolygon,
    kappa: f64,
    cfg: &QuadratureConfig,
) -> Result<MomentResult> {
    if !p.is_finite() {
        return Err(Error::domain("point", "must be finite"));
    }
    if !(kappa >= 1.0 && kappa.is_finite()) {
        return Err(Error::domain("kappa", format!("must be >= 1, got {kappa}")));
    }
    let area = poly.area();
    if !(area > 0.0) {
        return Err(Error::ZeroArea);
    }
    let (integral, method) = if kappa == 1.0 {
        (distance_integral(p, poly), MomentMethod::ClosedForm)
    } else {
        let edges: Vec<(Point, Point)> = poly.edges().collect();
        let est = integrate_apex_power(p, &edges, kappa, cfg)?;
        (est.value.max(0.0), MomentMethod::Quadrature)
    };
    Ok(MomentResult {
        integral,
        area,
        mean: integral / area,
        kappa,
        method,
    })
}

/// Mean distance from the apex of a circular sector of radius `r`, angle `alpha`.
///
/// Independent of `alpha`: `(α r³/3) / (α r²/2) = 2r/3`.
pub fn sector_mean_distance(r: f64, alpha: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("r", "must be positive"));
    }
    if !(alpha > 0.0 && alpha <= std::f64::consts::TAU) {
        return Err(Error::domain("alpha", "must lie in (0, 2π]"));
    }
    Ok((alpha * r.powi(3) / 3.0) / (alpha * r * r / 2.0))
}

/// `μ*/Δ` for a line segment: the midpoint sees a mean distance of a quarter length.
pub fn segment_mean_distance_ratio() -> f64 {
    0.25
}

/// Mean over a disjoint union, as the area-weighted average of the part means.
pub fn union_mean(parts: &[MomentResult]) -> f64 {
    let area: f64 = parts.iter().map(|m| m.area).sum();
    parts.iter().map(|m| m.mean * m.area).sum::<f64>() / area
}
