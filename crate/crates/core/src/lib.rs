//! Average distances and Fermat-Weber centers of planar convex polygons.
//!
//! * [`geometry`]: convex polygons, hulls, diameters, enclosing disks, clipping.
//! * [`moments`]: exact and adaptive evaluation of `∫_P |pq|^κ dq`.
//! * [`symmetrize`]: Steiner symmetrization about arbitrary axes.
//! * [`solver`]: Fermat-Weber centers (exact, grid, enclosing-disk center).
//! * [`bounds`]: body generators and the inequality verification harness.
//! * [`io`]: polygon JSON files.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod io;
pub mod moments;
mod optimize;
pub mod quadrature;
pub mod solver;
pub mod symmetrize;

pub use error::{Error, Result};
pub use geometry::{
    central_symmetry_center, clip, convex_hull, diameter, orient, smallest_enclosing_disk,
    ConvexPolygon, Disk, HalfPlane, Point, Rigid,
};
pub use moments::{polygon_moment, triangle_distance_integral, MomentMethod, MomentResult};
pub use quadrature::QuadratureConfig;
pub use solver::{fw_center_exact, fw_center_grid, fw_center_sed, ratio, FwMethod, FwResult};
pub use symmetrize::{double_symmetrize, steiner_symmetrize, Axis};
