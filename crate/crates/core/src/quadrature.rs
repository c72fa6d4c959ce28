//! Adaptive cubature over triangles.
//!
//! Each triangle is integrated with the symmetric 7-point degree-5 rule and
//! compared against the sum over its four midpoint children. The difference
//! is the local error estimate; triangles that miss their share of the
//! tolerance are quartered again, down to `max_subdivisions` levels.

use crate::error::{Error, Result};
use crate::geometry::{orient, Point};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub target_rel_error: f64,
    pub max_subdivisions: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            target_rel_error: 1e-10,
            max_subdivisions: 20,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_rel_error > 0.0 && self.target_rel_error.is_finite()) {
            return Err(Error::domain("target_rel_error", "must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Estimate {
    pub value: f64,
    /// Sum of local |fine − coarse| differences over accepted leaves.
    pub error: f64,
    pub evaluations: usize,
}

impl std::ops::AddAssign for Estimate {
    fn add_assign(&mut self, o: Estimate) {
        self.value += o.value;
        self.error += o.error;
        self.evaluations += o.evaluations;
    }
}

// barycentric nodes and weights of the 7-point rule
struct Rule {
    nodes: [[f64; 3]; 7],
    weights: [f64; 7],
}

fn rule() -> &'static Rule {
    use std::sync::OnceLock;
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let s15 = 15f64.sqrt();
        let (a1, b1) = ((9.0 - 2.0 * s15) / 21.0, (6.0 + s15) / 21.0);
        let (a2, b2) = ((9.0 + 2.0 * s15) / 21.0, (6.0 - s15) / 21.0);
        let w0 = 9.0 / 40.0;
        let w1 = (155.0 + s15) / 1200.0;
        let w2 = (155.0 - s15) / 1200.0;
        let third = 1.0 / 3.0;
        Rule {
            nodes: [
                [third, third, third],
                [a1, b1, b1],
                [b1, a1, b1],
                [b1, b1, a1],
                [a2, b2, b2],
                [b2, a2, b2],
                [b2, b2, a2],
            ],
            weights: [w0, w1, w1, w1, w2, w2, w2],
        }
    })
}

/// One application of the 7-point rule; signed by the triangle's orientation.
pub fn rule7<F: Fn(Point) -> f64>(f: &F, t: [Point; 3]) -> f64 {
    let r = rule();
    let area = 0.5 * orient(t[0], t[1], t[2]);
    let sum: f64 = r
        .nodes
        .iter()
        .zip(r.weights.iter())
        .map(|(l, w)| {
            let p = Point::new(
                l[0] * t[0].x + l[1] * t[1].x + l[2] * t[2].x,
                l[0] * t[0].y + l[1] * t[1].y + l[2] * t[2].y,
            );
            w * f(p)
        })
        .sum();
    area * sum
}

fn quarter(t: [Point; 3]) -> [[Point; 3]; 4] {
    let [a, b, c] = t;
    let ab = a.midpoint(b);
    let bc = b.midpoint(c);
    let ca = c.midpoint(a);
    [[a, ab, ca], [ab, b, bc], [ca, bc, c], [ab, bc, ca]]
}

/// Adaptive integral over one triangle to an absolute tolerance.
///
/// The result is signed: a clockwise triangle contributes the negated integral.
pub fn integrate_abs<F: Fn(Point) -> f64>(
    f: &F,
    t: [Point; 3],
    abs_tol: f64,
    max_depth: u32,
) -> Estimate {
    let coarse = rule7(f, t);
    refine(f, t, coarse, abs_tol, 0, max_depth)
}

fn refine<F: Fn(Point) -> f64>(
    f: &F,
    t: [Point; 3],
    coarse: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Estimate {
    let kids = quarter(t);
    let vals = kids.map(|k| rule7(f, k));
    let fine: f64 = vals.iter().sum();
    let diff = (fine - coarse).abs();
    if diff <= tol || depth + 1 >= max_depth {
        return Estimate {
            value: fine,
            error: diff,
            evaluations: 28,
        };
    }
    let mut acc = Estimate {
        value: 0.0,
        error: 0.0,
        evaluations: 28,
    };
    for (k, v) in kids.into_iter().zip(vals) {
        acc += refine(f, k, v, 0.25 * tol, depth + 1, max_depth);
    }
    acc
}

/// Adaptive integral over a set of (possibly signed) triangles to a relative
/// tolerance of the total.
///
/// The absolute budget is split between triangles in proportion to their
/// unsigned area.
pub fn integrate_triangles<F: Fn(Point) -> f64>(
    f: &F,
    tris: &[[Point; 3]],
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    let coarse: Vec<f64> = tris.iter().map(|&t| rule7(f, t)).collect();
    let scale: f64 = coarse
        .iter()
        .map(|v| v.abs())
        .sum::<f64>()
        .max(coarse.iter().sum::<f64>().abs());
    let areas: Vec<f64> = tris
        .iter()
        .map(|t| 0.5 * orient(t[0], t[1], t[2]).abs())
        .collect();
    let total_area: f64 = areas.iter().sum();
    let mut acc = Estimate::default();
    if !(total_area > 0.0) {
        return Ok(acc);
    }
    let budget = cfg.target_rel_error * scale.max(f64::MIN_POSITIVE);
    for ((&t, &c), &a) in tris.iter().zip(&coarse).zip(&areas) {
        if a == 0.0 {
            continue;
        }
        acc += refine(f, t, c, budget * a / total_area, 0, cfg.max_subdivisions);
        acc.evaluations += 7;
    }
    Ok(acc)
}

// 5-point Gauss-Legendre on [-1, 1]
const GL5_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_664,
];
const GL5_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_08,
    0.478_628_670_499_366_47,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_47,
    0.236_926_885_056_189_08,
];

fn gl5<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
    h * GL5_NODES
        .iter()
        .zip(GL5_WEIGHTS)
        .map(|(x, w)| w * f(m + h * x))
        .sum::<f64>()
}

/// Adaptive 5-point Gauss-Legendre on `[a, b]` by interval halving.
pub fn integrate_interval<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_depth: u32,
) -> Estimate {
    let coarse = gl5(f, a, b);
    halve(f, a, b, coarse, abs_tol, 0, max_depth)
}

fn halve<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    coarse: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Estimate {
    let m = 0.5 * (a + b);
    let (l, r) = (gl5(f, a, m), gl5(f, m, b));
    let diff = (l + r - coarse).abs();
    if diff <= tol || depth + 1 >= max_depth {
        return Estimate {
            value: l + r,
            error: diff,
            evaluations: 10,
        };
    }
    let mut acc = halve(f, a, m, l, 0.5 * tol, depth + 1, max_depth);
    acc += halve(f, m, b, r, 0.5 * tol, depth + 1, max_depth);
    acc.evaluations += 10;
    acc
}

/// `∫ |q − apex|^κ dq` over signed triangles `(apex, a, b)`.
///
/// In collapsed coordinates `q = apex + s·(a + t(b − a) − apex)` the radial
/// factor integrates exactly to `1/(κ + 2)`, leaving the smooth 1D integral
/// `|cross| /(κ + 2) · ∫₀¹ |a + t(b − a) − apex|^κ dt` for each edge.
pub fn integrate_apex_power(
    apex: Point,
    edges: &[(Point, Point)],
    kappa: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    let parts: Vec<(f64, Point, Point)> = edges
        .iter()
        .map(|&(a, b)| ((a - apex).cross(b - apex) / (kappa + 2.0), a - apex, b - a))
        .filter(|(w, _, _)| *w != 0.0)
        .collect();
    let coarse: Vec<f64> = parts
        .iter()
        .map(|&(w, u, e)| w * gl5(&|t: f64| (u + e * t).norm().powf(kappa), 0.0, 1.0))
        .collect();
    let scale: f64 = coarse.iter().map(|v| v.abs()).sum();
    let mut acc = Estimate::default();
    if parts.is_empty() {
        return Ok(acc);
    }
    let budget = cfg.target_rel_error * scale.max(f64::MIN_POSITIVE) / parts.len() as f64;
    for &(w, u, e) in &parts {
        let est = integrate_interval(
            &|t: f64| (u + e * t).norm().powf(kappa),
            0.0,
            1.0,
            budget / w.abs(),
            cfg.max_subdivisions,
        );
        acc.value += w * est.value;
        acc.error += w.abs() * est.error;
        acc.evaluations += est.evaluations + 5;
    }
    Ok(acc)
}
