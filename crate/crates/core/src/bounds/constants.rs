use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};

use super::sector::{cubic_root_z0, sed_ratio_constant, upper_constant, y1_branch_constant};
use crate::geometry::{ConvexPolygon, Point};
use crate::moments::polygon_moment;

/// `(√2 + ln(1 + √2))/3`, the mean distance of the unit square from a corner.
pub fn square_vertex_mean() -> f64 {
    (SQRT_2 + (1.0 + SQRT_2).ln()) / 3.0
}

/// The same quantity from the closed-form polygon moment.
pub fn square_vertex_mean_numeric() -> f64 {
    let square = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .expect("unit square");
    polygon_moment(Point::ORIGIN, &square, 1.0)
        .expect("κ = 1")
        .mean
}

/// Load-balancing approximation ratios for unit-square subdivisions.
///
/// * `old_lb_ratio`: `8 + √(2π)` with the former lower constant.
/// * `c1_lb_ratio`: `7 + √(2π)` once the lower constant is 1/6.
/// * `square_vertex_mean`: corner mean distance of the unit square.
/// * `final_ratio`: `7 + (√π/2)(√2 + ln(1 + √2))`.
pub fn improved_constants() -> BTreeMap<&'static str, f64> {
    let s = SQRT_2 + (1.0 + SQRT_2).ln();
    BTreeMap::from([
        ("old_lb_ratio", 8.0 + (2.0 * PI).sqrt()),
        ("c1_lb_ratio", 7.0 + (2.0 * PI).sqrt()),
        ("square_vertex_mean", square_vertex_mean()),
        ("final_ratio", 7.0 + PI.sqrt() / 2.0 * s),
    ])
}

/// Named constants of the average-distance bounds.
pub fn bound_constants() -> BTreeMap<&'static str, f64> {
    BTreeMap::from([
        ("c1_lower", 1.0 / 6.0),
        ("c2_upper", upper_constant()),
        ("c2_previous_upper", 2.0 / (3.0 * 3f64.sqrt())),
        ("case2_bound", y1_branch_constant()),
        ("z0", cubic_root_z0()),
        ("sed_approx_ratio", sed_ratio_constant()),
        ("symmetric_upper", 1.0 / 3.0),
        ("segment_ratio", 0.25),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        let c = improved_constants();
        assert!((c["old_lb_ratio"] - 10.5067).abs() < 5e-4);
        assert!((c["c1_lb_ratio"] - 9.5067).abs() < 5e-4);
        assert!((c["final_ratio"] - 9.0344).abs() < 5e-4);
        assert!((c["square_vertex_mean"] - 0.765196).abs() < 1e-6);
        assert!((square_vertex_mean_numeric() - c["square_vertex_mean"]).abs() < 1e-9);
    }

    #[test]
    fn bound_values() {
        let b = bound_constants();
        assert!((b["c2_upper"] - 0.3489).abs() < 1e-4);
        assert!(b["c2_upper"] < 0.3490);
        assert!((b["sed_approx_ratio"] - 2.0935).abs() < 1e-4);
        assert!((b["c2_previous_upper"] - 0.3849).abs() < 1e-4);
    }
}
