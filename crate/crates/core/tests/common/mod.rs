#![allow(dead_code)]

use fwkit::{convex_hull, ConvexPolygon, Point};
use proptest::prelude::*;

pub fn point(r: f64) -> impl Strategy<Value = Point> {
    (-r..r, -r..r).prop_map(|(x, y)| Point::new(x, y))
}

pub fn points(r: f64, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(point(r), n)
}

/// Hull of 3 to `max_n` random points, rejecting slivers.
pub fn polygon(max_n: usize) -> impl Strategy<Value = ConvexPolygon> {
    points(5.0, 3..=max_n).prop_filter_map("degenerate hull", |pts| {
        convex_hull(&pts).ok().filter(|p| p.area() > 1e-2)
    })
}

pub fn square() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap()
}
