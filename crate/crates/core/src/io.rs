//! Polygon files: `{"vertices": [[x0, y0], [x1, y1], ...]}`.
//!
//! Either orientation is accepted on input; output is counterclockwise.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, Point};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonFile {
    vertices: Vec<Point>,
}

pub fn parse_polygon(json: &str) -> Result<ConvexPolygon> {
    let file: PolygonFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    ConvexPolygon::new(file.vertices)
}

pub fn read_polygon(path: impl AsRef<Path>) -> Result<ConvexPolygon> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_polygon(&text)
}

pub fn polygon_to_json(poly: &ConvexPolygon) -> String {
    serde_json::to_string(poly).expect("polygon serializes")
}
