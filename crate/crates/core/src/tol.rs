//! Numerical tolerances used across the crate.
//!
//! All structural identities here have small-integer structure constants, so
//! the tight tolerances are attainable; the looser ones absorb accumulation
//! over long products and finite-difference truncation.

/// Componentwise tolerance for identities that are exact up to rounding.
pub const EXACT: f64 = 1e-12;

/// Tolerance for compositions that accumulate rounding (homomorphism
/// residuals over long random products, frame-based decompositions).
pub const ACCUMULATED: f64 = 1e-10;

/// Threshold below which a singular value of a co-rank-one metric counts as
/// its null direction.
pub const RANK_EPS: f64 = 1e-10;

/// Unit-norm drift beyond which a spin element is rejected outright.
/// Below this (but above [`EXACT`]) constructors may renormalize.
pub const RENORM_MAX: f64 = 1e-9;

/// Condition-number ceiling for metric inversion.
pub const COND_MAX: f64 = 1e12;

/// Gram-Schmidt pivot floor; a smaller pivot means the seeded complement of
/// the clock direction is degenerate.
pub const PIVOT_MIN: f64 = 1e-10;
