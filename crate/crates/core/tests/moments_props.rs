mod common;

use common::{point, polygon, square};
use fwkit::moments::{distance_integral, mean_distance, polygon_moment_with, union_mean};
use fwkit::quadrature::integrate_triangles;
use fwkit::*;
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = [Point; 3]> {
    [point(3.0), point(3.0), point(3.0)]
        .prop_filter("sliver", |t| orient(t[0], t[1], t[2]).abs() > 1e-2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn closed_form_matches_quadrature(p in point(5.0), t in triangle()) {
        let exact = triangle_distance_integral(p, t).unwrap();
        let quad = integrate_triangles(&|q: Point| q.dist(p), &[t], &QuadratureConfig::default()).unwrap();
        prop_assert!(((exact - quad.value.abs()) / exact).abs() < 1e-8);
    }

    #[test]
    fn similarity_scales_the_mean(poly in polygon(20), p in point(5.0), s in 0.01f64..100.0, t in point(50.0)) {
        let moved = poly.similar(s, t).unwrap();
        let a = mean_distance(p, &poly);
        let b = mean_distance(p * s + t, &moved);
        prop_assert!((b - s * a).abs() <= 1e-10 * s * a.max(1.0));
    }

    #[test]
    fn mean_is_one_lipschitz(poly in polygon(20), p in point(8.0), q in point(8.0)) {
        let d = (mean_distance(p, &poly) - mean_distance(q, &poly)).abs();
        prop_assert!(d <= p.dist(q) * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn mean_is_convex(poly in polygon(20), p in point(8.0), q in point(8.0), t in 0.0f64..1.0) {
        let m = p.lerp(q, t);
        let lhs = mean_distance(m, &poly);
        let rhs = (1.0 - t) * mean_distance(p, &poly) + t * mean_distance(q, &poly);
        prop_assert!(lhs <= rhs + 1e-10 * rhs.max(1.0));
    }

    #[test]
    fn fan_split_adds_up(poly in polygon(20), p in point(6.0)) {
        // the polygon integral equals the sum over an ear triangulation
        let v = poly.vertices();
        let sum: f64 = (1..v.len() - 1)
            .map(|i| triangle_distance_integral(p, [v[0], v[i], v[i + 1]]).unwrap())
            .sum();
        let whole = distance_integral(p, &poly);
        prop_assert!((sum - whole).abs() <= 1e-10 * whole);
    }

    #[test]
    fn union_never_beats_the_worse_part(a in polygon(12), b in polygon(12), p in point(20.0), dir in 0.0f64..6.3) {
        let shift = Point::new(dir.cos(), dir.sin()) * 20.0;
        let b = b.similar(1.0, shift).unwrap();
        let parts = [polygon_moment(p, &a, 1.0).unwrap(), polygon_moment(p, &b, 1.0).unwrap()];
        prop_assert!(union_mean(&parts) <= parts[0].mean.max(parts[1].mean) + 1e-12);
    }

    #[test]
    fn right_triangles_exceed_a_third(a in 0.0f64..0.999, b in 1e-3f64..10.0) {
        let t = [Point::new(a, 0.0), Point::new(a, b), Point::new(1.0, 0.0)];
        let m = triangle_distance_integral(Point::ORIGIN, t).unwrap() / (0.5 * b * (1.0 - a));
        prop_assert!(m > 1.0 / 3.0);
    }

    #[test]
    fn vertical_side_triangles_exceed_a_third(a in 0.0f64..0.999, y0 in 0.0f64..5.0, h in 1e-3f64..5.0) {
        let t = [Point::new(a, y0), Point::new(a, y0 + h), Point::new(1.0, 0.0)];
        let m = triangle_distance_integral(Point::ORIGIN, t).unwrap() / (0.5 * h * (1.0 - a));
        prop_assert!(m > 1.0 / 3.0);
    }

    #[test]
    fn moments_grow_with_kappa_beyond_unit_distance(poly in polygon(12), kappa in 1.0f64..6.0) {
        // far from the body every distance exceeds one, so q ↦ |pq|^κ is increasing in κ
        let p = Point::new(30.0, 0.0);
        let cfg = QuadratureConfig { target_rel_error: 1e-9, max_subdivisions: 20 };
        let lo = polygon_moment_with(p, &poly, kappa, &cfg).unwrap().mean;
        let hi = polygon_moment_with(p, &poly, kappa + 0.5, &cfg).unwrap().mean;
        prop_assert!(hi > lo);
    }
}

#[test]
fn quadrature_route_agrees_with_closed_form_at_kappa_one() {
    let s = square();
    let cfg = QuadratureConfig::default();
    for p in [
        Point::new(0.3, 0.4),
        Point::new(1.0, 1.0),
        Point::new(-2.0, 0.5),
    ] {
        let exact = polygon_moment(p, &s, 1.0).unwrap();
        let edges: Vec<_> = s.edges().collect();
        let quad = fwkit::quadrature::integrate_apex_power(p, &edges, 1.0, &cfg).unwrap();
        assert!((exact.integral - quad.value).abs() < 1e-10 * exact.integral);
        assert_eq!(exact.method, MomentMethod::ClosedForm);
    }
}

#[test]
fn kappa_moments_of_the_disk() {
    use fwkit::bounds::generate::{generate, GeneratorKind, GeneratorSpec};
    let disk = generate(&GeneratorSpec::new(GeneratorKind::RegularNgon { n: 512 })).unwrap();
    for kappa in [2.0, 3.0, 5.0, 10.0] {
        let m = polygon_moment(Point::ORIGIN, &disk, kappa).unwrap();
        assert!(
            (m.mean - 2.0 / (kappa + 2.0)).abs() < 2e-3,
            "κ={kappa}: {}",
            m.mean
        );
        assert_eq!(m.method, MomentMethod::Quadrature);
    }
}

#[test]
fn bad_kappa_is_a_domain_error() {
    assert!(matches!(
        polygon_moment(Point::ORIGIN, &square(), 0.5),
        Err(Error::Domain { field: "kappa", .. })
    ));
}
