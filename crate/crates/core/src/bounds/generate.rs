use std::f64::consts::{FRAC_PI_3, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, ConvexPolygon, Point};

/// Identifies the random stream used by the seeded generators.
pub const RNG_ALGORITHM: &str = "chacha8 (rand_chacha 0.9), polar-uniform disk sampling";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Vertices `(±1, 0), (0, ±eps)`.
    Rhombus { eps: f64 },
    /// Circumradius 1, first vertex on the positive x-axis.
    RegularNgon { n: usize },
    /// Hull of `n` uniform points in the unit disk.
    RandomHull { n: usize, seed: u64 },
    /// Hull of `n` uniform points in the unit disk and their antipodes.
    RandomSymmetric { n: usize, seed: u64 },
    /// Width-2 Reuleaux triangle, each arc sampled at `segments + 1` points.
    ReuleauxTriangle { segments: usize },
    /// `[−1/2, 1/2] × [−h/2, h/2]`.
    ThinRectangle { h: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub scale: f64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind) -> Self {
        GeneratorSpec { kind, scale: 1.0 }
    }

    pub fn is_random(&self) -> bool {
        matches!(
            self.kind,
            GeneratorKind::RandomHull { .. } | GeneratorKind::RandomSymmetric { .. }
        )
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return bad(format!("scale must be positive, got {}", self.scale));
        }
        match self.kind {
            GeneratorKind::Rhombus { eps } if !(eps > 0.0 && eps <= 1.0) => {
                bad(format!("rhombus eps must lie in (0, 1], got {eps}"))
            }
            GeneratorKind::ThinRectangle { h } if !(h > 0.0 && h <= 1.0) => {
                bad(format!("rectangle h must lie in (0, 1], got {h}"))
            }
            GeneratorKind::RegularNgon { n }
            | GeneratorKind::RandomHull { n, .. }
            | GeneratorKind::RandomSymmetric { n, .. }
                if n < 3 =>
            {
                bad(format!("n must be at least 3, got {n}"))
            }
            GeneratorKind::ReuleauxTriangle { segments } if segments < 2 => {
                bad(format!("segments must be at least 2, got {segments}"))
            }
            _ => Ok(()),
        }
    }
}

fn unit_disk_points(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = rng.random::<f64>().sqrt();
            let t = TAU * rng.random::<f64>();
            Point::new(r * t.cos(), r * t.sin())
        })
        .collect()
}

fn reuleaux_ring(segments: usize) -> Vec<Point> {
    let rc = 2.0 / 3f64.sqrt();
    let corner = |k: usize| {
        let t = PI / 2.0 + TAU * k as f64 / 3.0;
        Point::new(rc * t.cos(), rc * t.sin())
    };
    // arc opposite corner k runs from corner k+1 to corner k+2, radius 2
    let mut ring = Vec::with_capacity(3 * segments);
    for k in 0..3 {
        let c = corner(k);
        let start = corner((k + 1) % 3) - c;
        let a0 = start.y.atan2(start.x);
        for s in 0..segments {
            let t = a0 + FRAC_PI_3 * s as f64 / segments as f64;
            ring.push(c + Point::new(2.0 * t.cos(), 2.0 * t.sin()));
        }
    }
    ring
}

pub fn generate(spec: &GeneratorSpec) -> Result<ConvexPolygon> {
    spec.validate()?;
    let poly = match spec.kind {
        GeneratorKind::Rhombus { eps } => ConvexPolygon::new(vec![
            Point::new(1.0, 0.0),
            Point::new(0.0, eps),
            Point::new(-1.0, 0.0),
            Point::new(0.0, -eps),
        ])?,
        GeneratorKind::RegularNgon { n } => ConvexPolygon::new(
            (0..n)
                .map(|k| {
                    let t = TAU * k as f64 / n as f64;
                    Point::new(t.cos(), t.sin())
                })
                .collect(),
        )?,
        GeneratorKind::RandomHull { n, seed } => convex_hull(&unit_disk_points(n, seed))?,
        GeneratorKind::RandomSymmetric { n, seed } => {
            let mut pts = unit_disk_points(n, seed);
            let anti: Vec<Point> = pts.iter().map(|&p| -p).collect();
            pts.extend(anti);
            convex_hull(&pts)?
        }
        GeneratorKind::ReuleauxTriangle { segments } => {
            ConvexPolygon::new(reuleaux_ring(segments))?
        }
        GeneratorKind::ThinRectangle { h } => ConvexPolygon::new(vec![
            Point::new(-0.5, -0.5 * h),
            Point::new(0.5, -0.5 * h),
            Point::new(0.5, 0.5 * h),
            Point::new(-0.5, 0.5 * h),
        ])?,
    };
    if spec.scale == 1.0 {
        Ok(poly)
    } else {
        poly.similar(spec.scale, Point::ORIGIN)
    }
}

/// `0.5, 0.2, 0.1, 0.05, …`: the descending 5-2-1 ladder.
pub fn ladder(i: usize) -> f64 {
    let mantissa = [5.0, 2.0, 1.0][i % 3];
    mantissa * 10f64.powi(-(i as i32 / 3) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{central_symmetry_center, diameter};
    use approx::assert_relative_eq;

    #[test]
    fn rhombus() {
        let p = generate(&GeneratorSpec::new(GeneratorKind::Rhombus { eps: 0.5 })).unwrap();
        assert_relative_eq!(diameter(&p).0, 2.0);
        assert_relative_eq!(p.area(), 1.0);
    }

    #[test]
    fn random_symmetric_is_centered() {
        let p = generate(&GeneratorSpec::new(GeneratorKind::RandomSymmetric {
            n: 10,
            seed: 7,
        }))
        .unwrap();
        let c = central_symmetry_center(&p, 1e-12).unwrap();
        assert!(c.norm() < 1e-15);
    }

    #[test]
    fn reuleaux_width() {
        let p = generate(&GeneratorSpec::new(GeneratorKind::ReuleauxTriangle {
            segments: 64,
        }))
        .unwrap();
        assert_eq!(p.len(), 192);
        assert!((diameter(&p).0 - 2.0).abs() < 1e-4);
        // area of the width-2 Reuleaux triangle is 2(π − √3); arcs are inscribed
        let exact = 2.0 * (PI - 3f64.sqrt());
        assert!(p.area() < exact && p.area() > exact - 1e-3);
    }

    #[test]
    fn deterministic_random_hulls() {
        let s = GeneratorSpec::new(GeneratorKind::RandomHull { n: 30, seed: 42 });
        assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
        let t = GeneratorSpec::new(GeneratorKind::RandomHull { n: 30, seed: 43 });
        assert_ne!(generate(&s).unwrap(), generate(&t).unwrap());
        for v in generate(&s).unwrap().vertices() {
            assert!(v.norm() <= 1.0);
        }
    }

    #[test]
    fn scaling_and_rectangle() {
        let mut s = GeneratorSpec::new(GeneratorKind::ThinRectangle { h: 0.5 });
        s.scale = 4.0;
        let p = generate(&s).unwrap();
        assert_relative_eq!(p.area(), 8.0);
    }

    #[test]
    fn invalid_specs() {
        for kind in [
            GeneratorKind::Rhombus { eps: 0.0 },
            GeneratorKind::Rhombus { eps: 1.5 },
            GeneratorKind::RegularNgon { n: 2 },
            GeneratorKind::RandomHull { n: 1, seed: 0 },
            GeneratorKind::ReuleauxTriangle { segments: 1 },
            GeneratorKind::ThinRectangle { h: 0.0 },
        ] {
            assert!(matches!(
                generate(&GeneratorSpec::new(kind)),
                Err(Error::InvalidSpec(_))
            ));
        }
        let mut s = GeneratorSpec::new(GeneratorKind::RegularNgon { n: 5 });
        s.scale = -1.0;
        assert!(generate(&s).is_err());
    }

    #[test]
    fn ladder_values() {
        let v: Vec<f64> = (0..7).map(ladder).collect();
        let want = [0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005];
        for (a, b) in v.iter().zip(want) {
            assert_relative_eq!(*a, b, max_relative = 1e-15);
        }
    }

    #[test]
    fn spec_json_shape() {
        let s = GeneratorSpec::new(GeneratorKind::RandomHull { n: 5, seed: 3 });
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"kind":"random-hull","n":5,"seed":3,"scale":1.0}"#);
        let back: GeneratorSpec = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
