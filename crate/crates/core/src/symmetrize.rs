//! Steiner symmetrization of convex polygons.
//!
//! In the frame where the axis is the x-axis, a convex polygon is bounded by
//! an upper chain `f` and a lower chain `g`. Its symmetral is bounded by
//! `±(f − g)/2`, which is linear between consecutive vertex abscissae of
//! either chain, so evaluating the half-width at those abscissae gives the
//! symmetral exactly.

use crate::error::{Error, Result};
use crate::geometry::{diameter, ConvexPolygon, Point, Rigid};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    point: Point,
    direction: Point,
}

impl Axis {
    pub fn new(point: Point, direction: Point) -> Result<Self> {
        let len = direction.norm();
        if !(point.is_finite() && len.is_finite() && len > 0.0) {
            return Err(Error::domain(
                "axis",
                "direction must be finite and non-zero",
            ));
        }
        Ok(Axis {
            point,
            direction: direction * (1.0 / len),
        })
    }

    pub fn x_axis() -> Self {
        Axis {
            point: Point::ORIGIN,
            direction: Point::new(1.0, 0.0),
        }
    }

    pub fn y_axis() -> Self {
        Axis {
            point: Point::ORIGIN,
            direction: Point::new(0.0, 1.0),
        }
    }

    pub fn point(&self) -> Point {
        self.point
    }

    pub fn direction(&self) -> Point {
        self.direction
    }

    pub fn reflect(&self, p: Point) -> Point {
        let d = p - self.point;
        let along = self.direction * d.dot(self.direction);
        self.point + along * 2.0 - d
    }
}

/// Lowest and highest `y` of the boundary over the vertical line at `x`.
fn vertical_extent(ring: &[Point], x: f64, tol: f64) -> (f64, f64) {
    let n = ring.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        let (x0, x1) = (a.x.min(b.x), a.x.max(b.x));
        if x < x0 - tol || x > x1 + tol {
            continue;
        }
        if x1 - x0 <= tol {
            lo = lo.min(a.y.min(b.y));
            hi = hi.max(a.y.max(b.y));
        } else {
            let t = ((x - a.x) / (b.x - a.x)).clamp(0.0, 1.0);
            let y = a.y + t * (b.y - a.y);
            lo = lo.min(y);
            hi = hi.max(y);
        }
    }
    (lo, hi)
}

pub fn steiner_symmetrize(poly: &ConvexPolygon, axis: &Axis) -> ConvexPolygon {
    let frame = Rigid::to_frame(axis.point, axis.direction);
    let local: Vec<Point> = poly.vertices().iter().map(|&p| frame.apply(p)).collect();

    let mut xs: Vec<f64> = local.iter().map(|p| p.x).collect();
    xs.sort_by(f64::total_cmp);
    let width = xs[xs.len() - 1] - xs[0];
    let tol = 1e-12 * width;
    xs.dedup_by(|b, a| *b - *a <= tol);

    let half: Vec<f64> = xs
        .iter()
        .map(|&x| {
            let (lo, hi) = vertical_extent(&local, x, tol);
            0.5 * (hi - lo).max(0.0)
        })
        .collect();

    let mut ring: Vec<Point> = Vec::with_capacity(2 * xs.len());
    ring.extend(xs.iter().zip(&half).map(|(&x, &w)| Point::new(x, -w)));
    ring.extend(xs.iter().zip(&half).rev().map(|(&x, &w)| Point::new(x, w)));

    let back = frame.inverse();
    let ring: Vec<Point> = ring.into_iter().map(|p| back.apply(p)).collect();
    // area is preserved, so the symmetral of a valid polygon is valid
    ConvexPolygon::new(ring).expect("symmetral of a convex polygon is a convex polygon")
}

/// Symmetrize about a diameter's supporting line, then about its bisector.
///
/// The result is expressed in the frame where that diameter runs from
/// `(−Δ/2, 0)` to `(Δ/2, 0)`, so it is symmetric about both coordinate axes.
pub fn double_symmetrize(poly: &ConvexPolygon) -> ConvexPolygon {
    let (_, a, b) = diameter(poly);
    let frame = Rigid::to_frame(a.midpoint(b), b - a);
    let placed = poly.transform(&frame);
    let once = steiner_symmetrize(&placed, &Axis::x_axis());
    steiner_symmetrize(&once, &Axis::y_axis())
}

/// Every vertex reflected across `axis` lands within `tol` of some vertex.
pub fn is_symmetric_about(poly: &ConvexPolygon, axis: &Axis, tol: f64) -> bool {
    let v = poly.vertices();
    v.iter().all(|&p| {
        let r = axis.reflect(p);
        v.iter().any(|&q| q.dist(r) <= tol)
    })
}
