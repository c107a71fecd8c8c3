//! Numerical infrastructure: complex segment quadrature, finite differences,
//! and the planar geometry predicates used to certify region properties.
//!
//! Everything here is pure and reentrant; values are immutable after
//! construction and safe to share across threads.

pub mod diff;
pub mod geometry;
pub mod quadrature;
