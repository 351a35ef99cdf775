//! Numerical tolerances shared across the crate.

/// Construction-time checks: normalization, unitarity, Bloch norm.
pub const CONSTRUCT: f64 = 1e-12;

/// Derived identities and density-matrix validation.
pub const DERIVED: f64 = 1e-10;

/// Values within this distance outside `[0, 1]` are clamped; beyond it they are errors.
pub const CLAMP: f64 = 1e-12;

/// Largest disagreement tolerated between the two projector routes to the probe predictability.
pub const PROJECTOR_ASYMMETRY: f64 = 1e-6;

/// Default upper bound on the probe Hilbert-space dimension.
pub const MAX_PROBE_DIM: usize = 64;

/// Clamp `x` into `[0, 1]` when it is within [`CLAMP`] outside; `None` otherwise.
pub fn clamp_unit(x: f64) -> Option<f64> {
    if (-CLAMP..=1.0 + CLAMP).contains(&x) {
        Some(x.clamp(0.0, 1.0))
    } else {
        None
    }
}
