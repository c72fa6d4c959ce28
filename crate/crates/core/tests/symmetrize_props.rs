mod common;

use common::{point, polygon};
use fwkit::symmetrize::is_symmetric_about;
use fwkit::*;
use proptest::prelude::*;

fn axis() -> impl Strategy<Value = Axis> {
    (point(3.0), 0.0f64..std::f64::consts::PI)
        .prop_map(|(p, t)| Axis::new(p, Point::new(t.cos(), t.sin())).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn preserves_area_and_gains_the_symmetry(p in polygon(30), a in axis()) {
        let s = steiner_symmetrize(&p, &a);
        prop_assert!(((s.area() - p.area()) / p.area()).abs() <= 1e-10);
        prop_assert!(is_symmetric_about(&s, &a, 1e-9 * diameter(&p).0));
    }

    #[test]
    fn is_idempotent(p in polygon(30), a in axis()) {
        let once = steiner_symmetrize(&p, &a);
        let twice = steiner_symmetrize(&once, &a);
        prop_assert_eq!(once.len(), twice.len());
        for (u, v) in once.vertices().iter().zip(twice.vertices()) {
            prop_assert!(u.dist(*v) <= 1e-9 * diameter(&p).0);
        }
    }

    #[test]
    fn never_grows_the_diameter(p in polygon(30), a in axis()) {
        let s = steiner_symmetrize(&p, &a);
        prop_assert!(diameter(&s).0 <= diameter(&p).0 * (1.0 + 1e-12));
    }

    #[test]
    fn keeps_a_diameter_lying_on_the_axis(p in polygon(30)) {
        let (d, u, v) = diameter(&p);
        let s = steiner_symmetrize(&p, &Axis::new(u, v - u).unwrap());
        prop_assert!((diameter(&s).0 - d).abs() <= 1e-9);
    }

    #[test]
    fn double_symmetrization_is_doubly_symmetric(p in polygon(30)) {
        let d = double_symmetrize(&p);
        let tol = 1e-9 * diameter(&p).0;
        prop_assert!(is_symmetric_about(&d, &Axis::x_axis(), tol));
        prop_assert!(is_symmetric_about(&d, &Axis::y_axis(), tol));
        prop_assert!((diameter(&d).0 - diameter(&p).0).abs() <= tol);
        prop_assert!(central_symmetry_center(&d, tol).is_some_and(|c| c.norm() <= tol));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn does_not_raise_the_fermat_weber_value(p in polygon(20), a in axis()) {
        let tol = 1e-7;
        let before = fw_center_exact(&p, tol).unwrap().mu_star;
        let after = fw_center_exact(&steiner_symmetrize(&p, &a), tol).unwrap().mu_star;
        prop_assert!(after <= before + 2.0 * tol);
    }
}
