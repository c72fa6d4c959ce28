//! Python bindings: polygons, moments, Fermat-Weber solvers, symmetrization
//! and the bound checks. Points cross the boundary as `(x, y)` tuples.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fwkit::bounds::generate::{generate, GeneratorKind, GeneratorSpec};
use fwkit::bounds::report::{verify_bounds_with, BoundReport, VerifyOptions};
use fwkit::bounds::{bound_constants, improved_constants, kappa_comparison, maximize_sector_bound};
use fwkit::moments::mean_distance;
use fwkit::solver::{default_tol, fw_center_exact_with_budget, DEFAULT_BUDGET};
use fwkit::symmetrize::{double_symmetrize, steiner_symmetrize, Axis};
use fwkit::{
    convex_hull, diameter, fw_center_grid, fw_center_sed, polygon_moment, smallest_enclosing_disk,
    ConvexPolygon, Error, FwMethod, FwResult, Point,
};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NonConvergence { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn pt((x, y): (f64, f64)) -> Point {
    Point::new(x, y)
}

fn tup(p: Point) -> (f64, f64) {
    (p.x, p.y)
}

/// A convex polygon, stored counterclockwise.
#[pyclass(name = "ConvexPolygon", module = "pyfwkit", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolygon {
    inner: ConvexPolygon,
}

#[pymethods]
impl PyPolygon {
    #[new]
    fn new(vertices: Vec<(f64, f64)>) -> PyResult<Self> {
        let inner = ConvexPolygon::new(vertices.into_iter().map(pt).collect()).map_err(to_py)?;
        Ok(PyPolygon { inner })
    }

    /// Convex hull of a point cloud.
    #[staticmethod]
    fn hull(points: Vec<(f64, f64)>) -> PyResult<Self> {
        let pts: Vec<Point> = points.into_iter().map(pt).collect();
        Ok(PyPolygon {
            inner: convex_hull(&pts).map_err(to_py)?,
        })
    }

    /// Parse `{"vertices": [[x, y], ...]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPolygon {
            inner: fwkit::io::parse_polygon(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        fwkit::io::polygon_to_json(&self.inner)
    }

    #[getter]
    fn vertices(&self) -> Vec<(f64, f64)> {
        self.inner.vertices().iter().map(|&p| tup(p)).collect()
    }

    #[getter]
    fn area(&self) -> f64 {
        self.inner.area()
    }

    #[getter]
    fn centroid(&self) -> (f64, f64) {
        tup(self.inner.centroid())
    }

    #[getter]
    fn diameter(&self) -> f64 {
        diameter(&self.inner).0
    }

    /// Smallest enclosing disk as `(center, radius)`.
    fn enclosing_disk(&self) -> ((f64, f64), f64) {
        let d = smallest_enclosing_disk(&self.inner);
        (tup(d.center), d.radius)
    }

    #[pyo3(signature = (point, tol = 0.0))]
    fn contains(&self, point: (f64, f64), tol: f64) -> bool {
        self.inner.contains(pt(point), tol)
    }

    /// Mean distance from `point` to the polygon.
    fn mean_distance(&self, point: (f64, f64)) -> f64 {
        mean_distance(pt(point), &self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "ConvexPolygon({} vertices, area={})",
            self.inner.len(),
            self.inner.area()
        )
    }
}

/// Outcome of a Fermat-Weber solve.
#[pyclass(name = "FwResult", module = "pyfwkit", frozen, get_all)]
struct PyFwResult {
    center: (f64, f64),
    mu_star: f64,
    method: &'static str,
    evaluations: usize,
    achieved_tol: f64,
}

impl From<FwResult> for PyFwResult {
    fn from(r: FwResult) -> Self {
        PyFwResult {
            center: tup(r.center),
            mu_star: r.mu_star,
            method: match r.method {
                FwMethod::Exact => "exact",
                FwMethod::Grid => "grid",
                FwMethod::SedCenter => "sed",
            },
            evaluations: r.evaluations,
            achieved_tol: r.achieved_tol,
        }
    }
}

#[pymethods]
impl PyFwResult {
    fn __repr__(&self) -> String {
        format!(
            "FwResult(center={:?}, mu_star={}, method='{}')",
            self.center, self.mu_star, self.method
        )
    }
}

/// Fermat-Weber center by `method` in {"exact", "grid", "sed"}.
#[pyfunction]
#[pyo3(signature = (poly, method = "exact", eps = 0.1, tol = None, budget = DEFAULT_BUDGET))]
fn fw_center(
    poly: &PyPolygon,
    method: &str,
    eps: f64,
    tol: Option<f64>,
    budget: usize,
) -> PyResult<PyFwResult> {
    let p = &poly.inner;
    let res = match method {
        "exact" => fw_center_exact_with_budget(p, tol.unwrap_or_else(|| default_tol(p)), budget),
        "grid" => fw_center_grid(p, eps),
        "sed" => Ok(fw_center_sed(p)),
        other => return Err(PyValueError::new_err(format!("method: unknown '{other}'"))),
    };
    res.map(Into::into).map_err(to_py)
}

/// `μ*/Δ` of the polygon.
#[pyfunction]
#[pyo3(signature = (poly, tol = None))]
fn ratio(poly: &PyPolygon, tol: Option<f64>) -> PyResult<f64> {
    let p = &poly.inner;
    fwkit::ratio(p, tol.unwrap_or_else(|| default_tol(p))).map_err(to_py)
}

/// Moment `∫ |pq|^κ dq`; returns a dict with integral, area, mean, kappa, method.
#[pyfunction]
#[pyo3(signature = (poly, point, kappa = 1.0))]
fn moment<'py>(
    py: Python<'py>,
    poly: &PyPolygon,
    point: (f64, f64),
    kappa: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let m = polygon_moment(pt(point), &poly.inner, kappa).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("integral", m.integral)?;
    d.set_item("area", m.area)?;
    d.set_item("mean", m.mean)?;
    d.set_item("kappa", m.kappa)?;
    d.set_item("method", format!("{:?}", m.method))?;
    Ok(d)
}

/// Steiner symmetrization about the line through `point` along `direction`.
#[pyfunction]
fn symmetrize(poly: &PyPolygon, point: (f64, f64), direction: (f64, f64)) -> PyResult<PyPolygon> {
    let axis = Axis::new(pt(point), pt(direction)).map_err(to_py)?;
    Ok(PyPolygon {
        inner: steiner_symmetrize(&poly.inner, &axis),
    })
}

/// Symmetrize about the diameter line, then about its perpendicular bisector.
#[pyfunction]
fn double_symmetrization(poly: &PyPolygon) -> PyPolygon {
    PyPolygon {
        inner: double_symmetrize(&poly.inner),
    }
}

fn report_dict<'py>(py: Python<'py>, r: &BoundReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("body_id", &r.body_id)?;
    d.set_item("delta", r.delta)?;
    d.set_item("R", r.r)?;
    d.set_item("mu_star", r.mu_star)?;
    d.set_item("ratio", r.ratio)?;
    d.set_item("symmetric", r.symmetric)?;
    d.set_item("sed_ratio", r.sed_ratio)?;
    let checks = PyDict::new(py);
    for (name, c) in &r.checks {
        checks.set_item(name, (c.pass, c.margin))?;
    }
    d.set_item("checks", checks)?;
    d.set_item("all_pass", r.all_pass())?;
    Ok(d)
}

/// Check the average-distance inequalities; `checks` maps name to `(pass, margin)`.
#[pyfunction]
#[pyo3(signature = (poly, tol = 1e-9, body_id = "body"))]
fn verify_bounds<'py>(
    py: Python<'py>,
    poly: &PyPolygon,
    tol: f64,
    body_id: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = VerifyOptions {
        tol,
        solver_tol: None,
    };
    let r = verify_bounds_with(body_id, &poly.inner, &opts).map_err(to_py)?;
    report_dict(py, &r)
}

/// Build a test body: rhombus(eps), regular-ngon(n), random-hull(n, seed),
/// random-symmetric(n, seed), reuleaux(segments), thin-rectangle(h).
#[pyfunction]
#[pyo3(signature = (kind, *, eps = 0.5, n = 12, seed = 0, segments = 64, h = 0.1, scale = 1.0))]
#[allow(clippy::too_many_arguments)]
fn make_body(
    kind: &str,
    eps: f64,
    n: usize,
    seed: u64,
    segments: usize,
    h: f64,
    scale: f64,
) -> PyResult<PyPolygon> {
    let kind = match kind {
        "rhombus" => GeneratorKind::Rhombus { eps },
        "regular-ngon" => GeneratorKind::RegularNgon { n },
        "random-hull" => GeneratorKind::RandomHull { n, seed },
        "random-symmetric" => GeneratorKind::RandomSymmetric { n, seed },
        "reuleaux" => GeneratorKind::ReuleauxTriangle { segments },
        "thin-rectangle" => GeneratorKind::ThinRectangle { h },
        other => return Err(PyValueError::new_err(format!("kind: unknown '{other}'"))),
    };
    let spec = GeneratorSpec { kind, scale };
    Ok(PyPolygon {
        inner: generate(&spec).map_err(to_py)?,
    })
}

/// All named constants in one dict.
#[pyfunction]
fn constants() -> BTreeMap<&'static str, f64> {
    let mut all = improved_constants();
    all.extend(bound_constants());
    all
}

/// Brute-force maximum of the double-sector bound: `(max, (x, y, R))`.
#[pyfunction]
#[pyo3(signature = (d = 1.0, grid_n = 2000))]
fn sector_maximum(d: f64, grid_n: usize) -> PyResult<(f64, (f64, f64, f64))> {
    let m = maximize_sector_bound(d, grid_n).map_err(to_py)?;
    Ok((m.max_val, (m.argmax.x, m.argmax.y, m.argmax.r)))
}

/// Optimal κ-moments of the diameter-2 disk and Reuleaux triangle.
#[pyfunction]
fn kappa_moments(kappa: f64) -> PyResult<(f64, f64)> {
    let c = kappa_comparison(kappa).map_err(to_py)?;
    Ok((c.mu_disk, c.mu_reuleaux))
}

#[pymodule]
fn pyfwkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolygon>()?;
    m.add_class::<PyFwResult>()?;
    m.add_function(wrap_pyfunction!(fw_center, m)?)?;
    m.add_function(wrap_pyfunction!(ratio, m)?)?;
    m.add_function(wrap_pyfunction!(moment, m)?)?;
    m.add_function(wrap_pyfunction!(symmetrize, m)?)?;
    m.add_function(wrap_pyfunction!(double_symmetrization, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(make_body, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(sector_maximum, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_moments, m)?)?;
    Ok(())
}
