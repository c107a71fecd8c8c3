//! Error type shared by every fallible operation in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong outside of caller programming errors.
///
/// Numerical routines report `NonConvergence` when a tolerance cannot be met
/// within the configured budget; constructors report `InvalidParams` when an
/// input violates a documented invariant.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Adaptive quadrature exhausted its subdivision budget.
    #[error(
        "quadrature did not converge: error estimate {achieved:.3e} after {panels} panels \
         (requested {requested:.3e})"
    )]
    NonConvergence {
        achieved: f64,
        requested: f64,
        panels: usize,
    },

    /// An input violates a documented precondition or invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The Möbius map was evaluated where its denominator vanishes
    /// (only possible when both arguments are unimodular).
    #[error("Möbius map evaluated at a pole: |1 + conj(lambda)·z| < 1e-15")]
    PoleAtInput,

    /// Cube-root branch tracking could not separate the three roots: either
    /// the point is too close to the origin to seed the continuation, or the
    /// bisection hit its depth cap without meeting the separation test.
    #[error("cube-root branch continuation is ambiguous near |z| = {z_abs:.3e} (limit {min_abs:.3e})")]
    BranchAmbiguity { z_abs: f64, min_abs: f64 },
}
