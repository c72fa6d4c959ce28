//! Planar primitives: points, convex polygons, half-planes and disks.
//!
//! A [`ConvexPolygon`] is always stored as a counterclockwise ring with no
//! repeated and no collinear vertices, and with strictly positive area.
//! Every other module relies on that normal form (the signed fan used by the
//! distance integrals needs strict convexity), so all constructors route
//! through [`ConvexPolygon::new`].

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance used when pruning collinear and duplicate vertices.
pub const PRUNE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Twice the signed area of the triangle `abc` (positive when counterclockwise).
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// A rigid motion of the plane: rotation by `angle` followed by translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rigid {
    cos: f64,
    sin: f64,
    shift: Point,
}

impl Rigid {
    pub fn new(angle: f64, shift: Point) -> Self {
        Rigid {
            cos: angle.cos(),
            sin: angle.sin(),
            shift,
        }
    }

    /// Motion taking `origin` to (0,0) and the unit vector `dir` to (1,0).
    pub fn to_frame(origin: Point, dir: Point) -> Self {
        let d = dir * (1.0 / dir.norm());
        // rotation by -theta: (c, -s) with c = d.x, s = d.y
        let cos = d.x;
        let sin = -d.y;
        let rotated = Point::new(
            cos * origin.x - sin * origin.y,
            sin * origin.x + cos * origin.y,
        );
        Rigid {
            cos,
            sin,
            shift: -rotated,
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(
            self.cos * p.x - self.sin * p.y + self.shift.x,
            self.sin * p.x + self.cos * p.y + self.shift.y,
        )
    }

    pub fn inverse(&self) -> Rigid {
        // R^T (p - t)
        let (c, s) = (self.cos, -self.sin);
        let t = self.shift;
        let rt = Point::new(c * t.x - s * t.y, s * t.x + c * t.y);
        Rigid {
            cos: c,
            sin: s,
            shift: -rt,
        }
    }
}

/// Closed half-plane `{p : p·normal ≤ offset}` with unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    normal: Point,
    offset: f64,
}

impl HalfPlane {
    /// Normalizes `normal` (and scales `offset` with it).
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        let len = normal.norm();
        if !(len.is_finite() && len > 0.0 && offset.is_finite()) {
            return Err(Error::domain(
                "normal",
                "half-plane normal must be finite and non-zero",
            ));
        }
        Ok(HalfPlane {
            normal: normal * (1.0 / len),
            offset: offset / len,
        })
    }

    pub fn normal(&self) -> Point {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn complement(&self) -> HalfPlane {
        HalfPlane {
            normal: -self.normal,
            offset: -self.offset,
        }
    }

    /// Signed distance, negative inside.
    pub fn signed_distance(&self, p: Point) -> f64 {
        p.dot(self.normal) - self.offset
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        p.dist(self.center) <= self.radius + tol
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min: Point,
    pub max: Point,
}

impl BoundingBox {
    pub fn of(points: &[Point]) -> Self {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        BoundingBox { min, max }
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn center(&self) -> Point {
        self.min.midpoint(self.max)
    }

    /// Larger side length; the length scale for relative tolerances.
    pub fn scale(&self) -> f64 {
        self.width().max(self.height())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds a polygon from a vertex ring in either orientation.
    ///
    /// Duplicate and collinear vertices are dropped (tolerance [`PRUNE_TOL`]
    /// relative to the bounding-box scale); a clockwise ring is reversed.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        let scale = BoundingBox::of(&vertices).scale();
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if !(scale > 0.0) {
            return Err(Error::ZeroArea);
        }
        let dup_tol = PRUNE_TOL * scale;
        let mut ring: Vec<Point> = Vec::with_capacity(vertices.len());
        for &p in &vertices {
            if ring.last().is_none_or(|&q| q.dist(p) > dup_tol) {
                ring.push(p);
            }
        }
        while ring.len() > 1 && ring[0].dist(ring[ring.len() - 1]) <= dup_tol {
            ring.pop();
        }
        if ring.len() < 3 {
            return Err(Error::TooFewVertices(ring.len()));
        }

        let area2 = signed_area2(&ring);
        if area2.abs() <= PRUNE_TOL * scale * scale {
            return Err(Error::ZeroArea);
        }
        if area2 < 0.0 {
            ring.reverse();
        }

        let cross_tol = PRUNE_TOL * scale * scale;
        loop {
            let n = ring.len();
            if n < 3 {
                return Err(Error::ZeroArea);
            }
            let mut removed = false;
            let mut i = 0;
            while i < ring.len() && ring.len() >= 3 {
                let n = ring.len();
                let prev = ring[(i + n - 1) % n];
                let cur = ring[i];
                let next = ring[(i + 1) % n];
                let turn = (cur - prev).cross(next - cur);
                if turn < -cross_tol {
                    return Err(Error::NotConvex(i));
                }
                if turn <= cross_tol {
                    ring.remove(i);
                    removed = true;
                } else {
                    i += 1;
                }
            }
            if !removed {
                break;
            }
        }
        if ring.len() < 3 {
            return Err(Error::ZeroArea);
        }

        // all turns are left; reject rings that wind more than once (stars)
        let n = ring.len();
        let turning: f64 = (0..n)
            .map(|i| {
                let a = ring[(i + 1) % n] - ring[i];
                let b = ring[(i + 2) % n] - ring[(i + 1) % n];
                a.cross(b).atan2(a.dot(b))
            })
            .sum();
        if (turning - TAU).abs() > 1e-6 {
            return Err(Error::NotConvex(0));
        }

        Ok(ConvexPolygon::canonical(ring))
    }

    // start the ring at the lexicographically smallest vertex (x, then y)
    fn canonical(mut ring: Vec<Point>) -> Self {
        let start = (0..ring.len())
            .min_by(|&i, &j| {
                ring[i]
                    .x
                    .total_cmp(&ring[j].x)
                    .then(ring[i].y.total_cmp(&ring[j].y))
            })
            .unwrap_or(0);
        ring.rotate_left(start);
        ConvexPolygon { vertices: ring }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Directed boundary edges in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> f64 {
        0.5 * signed_area2(&self.vertices)
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point {
        let o = self.vertices[0];
        let mut acc = Point::ORIGIN;
        let mut a2 = 0.0;
        for (a, b) in self.edges() {
            let w = (a - o).cross(b - o);
            acc = acc + (a + b - o * 2.0) * w;
            a2 += w;
        }
        o + acc * (1.0 / (3.0 * a2))
    }

    pub fn vertex_centroid(&self) -> Point {
        let n = self.vertices.len() as f64;
        let s = self.vertices.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        s * (1.0 / n)
    }

    pub fn bbox(&self) -> BoundingBox {
        BoundingBox::of(&self.vertices)
    }

    /// Point-in-polygon test; `tol` is an absolute distance slack.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.edges().all(|(a, b)| {
            let e = b - a;
            e.cross(p - a) >= -tol * e.norm()
        })
    }

    /// Closest point of the polygon (interior included) to `p`.
    pub fn project(&self, p: Point) -> Point {
        if self.contains(p, 0.0) {
            return p;
        }
        let mut best = self.vertices[0];
        let mut best_d = f64::INFINITY;
        for (a, b) in self.edges() {
            let e = b - a;
            let t = ((p - a).dot(e) / e.norm_sq()).clamp(0.0, 1.0);
            let q = a + e * t;
            let d = q.dist(p);
            if d < best_d {
                best_d = d;
                best = q;
            }
        }
        best
    }

    pub fn transform(&self, motion: &Rigid) -> ConvexPolygon {
        ConvexPolygon::canonical(self.vertices.iter().map(|&p| motion.apply(p)).collect())
    }

    /// Image under `p ↦ s·p + t`; `s` must be positive.
    pub fn similar(&self, s: f64, t: Point) -> Result<ConvexPolygon> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::domain("scale", "must be positive"));
        }
        ConvexPolygon::new(self.vertices.iter().map(|&p| p * s + t).collect())
    }
}

fn signed_area2(ring: &[Point]) -> f64 {
    let n = ring.len();
    let o = ring[0];
    (1..n.saturating_sub(1))
        .map(|i| (ring[i] - o).cross(ring[i + 1] - o))
        .sum()
}

/// Convex hull by Andrew's monotone chain.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon> {
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::AllCollinear);
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        return Err(Error::AllCollinear);
    }
    ConvexPolygon::new(hull).map_err(|e| match e {
        Error::ZeroArea | Error::TooFewVertices(_) => Error::AllCollinear,
        other => other,
    })
}

/// Diameter by rotating calipers; returns the length and an attaining vertex pair.
pub fn diameter(poly: &ConvexPolygon) -> (f64, Point, Point) {
    let v = poly.vertices();
    let n = v.len();
    let mut best = (0.0, v[0], v[1]);
    let mut consider = |a: Point, b: Point| {
        let d = a.dist(b);
        if d > best.0 {
            best = (d, a, b);
        }
    };
    let mut j = 1;
    for i in 0..n {
        let ni = (i + 1) % n;
        let e = v[ni] - v[i];
        let mut steps = 0;
        while steps < n && e.cross(v[(j + 1) % n] - v[j]) > 0.0 {
            j = (j + 1) % n;
            steps += 1;
        }
        let nj = (j + 1) % n;
        consider(v[i], v[j]);
        consider(v[ni], v[j]);
        consider(v[i], v[nj]);
        consider(v[ni], v[nj]);
    }
    best
}

/// Smallest enclosing disk of the polygon's vertices (randomized incremental).
///
/// The insertion order comes from a fixed-seed shuffle, so results are
/// reproducible.
pub fn smallest_enclosing_disk(poly: &ConvexPolygon) -> Disk {
    let origin = poly.vertex_centroid();
    let mut pts: Vec<Point> = poly.vertices().iter().map(|&p| p - origin).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ED_D15C);
    pts.shuffle(&mut rng);
    let tol = 1e-12 * poly.bbox().scale();

    let mut disk = Disk {
        center: pts[0],
        radius: 0.0,
    };
    for i in 1..pts.len() {
        if disk.contains(pts[i], tol) {
            continue;
        }
        disk = Disk {
            center: pts[i],
            radius: 0.0,
        };
        for j in 0..i {
            if disk.contains(pts[j], tol) {
                continue;
            }
            disk = disk_from_two(pts[i], pts[j]);
            for k in 0..j {
                if !disk.contains(pts[k], tol) {
                    disk = disk_from_three(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    Disk {
        center: disk.center + origin,
        radius: disk.radius,
    }
}

fn disk_from_two(a: Point, b: Point) -> Disk {
    Disk {
        center: a.midpoint(b),
        radius: 0.5 * a.dist(b),
    }
}

fn disk_from_three(a: Point, b: Point, c: Point) -> Disk {
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    if d.abs() <= 1e-300 {
        // collinear: the farthest pair spans the disk
        return [
            disk_from_two(a, b),
            disk_from_two(a, c),
            disk_from_two(b, c),
        ]
        .into_iter()
        .max_by(|x, y| x.radius.total_cmp(&y.radius))
        .unwrap();
    }
    let ux = (ac.y * ab.norm_sq() - ab.y * ac.norm_sq()) / d;
    let uy = (ab.x * ac.norm_sq() - ac.x * ab.norm_sq()) / d;
    let center = a + Point::new(ux, uy);
    let radius = center.dist(a).max(center.dist(b)).max(center.dist(c));
    Disk { center, radius }
}

/// Intersection with a half-plane; `None` when it has zero area.
pub fn clip(poly: &ConvexPolygon, h: &HalfPlane) -> Option<ConvexPolygon> {
    let v = poly.vertices();
    let n = v.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let da = h.signed_distance(a);
        let db = h.signed_distance(b);
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            out.push(a.lerp(b, da / (da - db)));
        }
    }
    if out.len() < 3 {
        return None;
    }
    if out.len() == n && out.iter().zip(v).all(|(p, q)| p == q) {
        return Some(poly.clone());
    }
    ConvexPolygon::new(out).ok()
}

/// Center of point symmetry, if the vertex ring is centrally symmetric within `tol`.
pub fn central_symmetry_center(poly: &ConvexPolygon, tol: f64) -> Option<Point> {
    let v = poly.vertices();
    let n = v.len();
    if !n.is_multiple_of(2) {
        return None;
    }
    let c = poly.vertex_centroid();
    let half = n / 2;
    let symmetric = (0..half).all(|i| (v[i] + v[i + half] - c * 2.0).norm() <= tol);
    symmetric.then_some(c)
}
