//! Body generators and the verification harness for the `μ*/Δ` bounds.

pub mod constants;
pub mod generate;
pub mod kappa;
pub mod report;
pub mod sector;

pub use constants::{bound_constants, improved_constants};
pub use generate::{generate, GeneratorKind, GeneratorSpec, RNG_ALGORITHM};
pub use kappa::{kappa_comparison, kappa_crossover, KappaComparison};
pub use report::{
    sweep, verify_bounds, verify_bounds_with, BoundReport, Check, SweepKind, VerifyOptions,
};
pub use sector::{cubic_root_z0, maximize_sector_bound, sector_bound_f, SectorMaximum};
