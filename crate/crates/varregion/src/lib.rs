//! Regions of variability for integrals of analytic functions with positive
//! real part.
//!
//! For `|γ| < π/2` and `0 ≤ β < 1`, consider the analytic functions `P` on
//! the unit disk with `P(0) = 1` and `Re(e^{iγ} P(z)) > β cos γ`, restricted
//! to the slice with first Taylor coefficient `P′(0) = 2(1−β)e^{−iγ}λ cos γ`.
//! As `P` ranges over that slice, the integral `∫₀^{z₀} P(ζ) dζ` fills a
//! compact convex region of the plane.  This crate computes that region's
//! boundary curve by two independent routes (adaptive quadrature of the
//! extremal kernels and an explicit logarithmic closed form), along with
//! pointwise growth bounds, an enclosure disk, two derived classes of
//! univalent functions, and a seeded property-verification harness that
//! cross-checks all of it.
//!
//! Start with the `examples/` directory — there is one runnable example per
//! major capability — or with the thin `varregion` CLI.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod kernels;
pub mod numerics;
pub mod output;
pub mod regions;
pub mod subclasses;
pub mod table1;
pub mod verify;

/// Complex scalar used throughout.
pub type Cx = num_complex::Complex64;

pub use error::{Error, Result};
pub use kernels::{ClassParams, ExtremalIndex, SampledMember, SchwarzGenerator};
pub use numerics::geometry::Polygon;
pub use numerics::quadrature::{integrate_segment, integrate_unit_interval, QuadratureConfig};
pub use regions::{BoundaryCurve, CurveMethod, RegionBoundary};
