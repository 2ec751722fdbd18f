//! Shared numerical tolerances.

/// Arithmetic identities (sums, reflections, support values).
pub const ARITH: f64 = 1e-9;
/// Equalities that pass through a linear program.
pub const LP: f64 = 1e-7;
/// Minimum margin certifying that a point is interior.
pub const INTERIOR_MARGIN: f64 = 1e-9;
/// Slack used when checking radii witnesses.
pub const WITNESS: f64 = 1e-6;
/// Chain comparisons in the inequality verifier.
pub const CHAIN: f64 = 1e-6;
