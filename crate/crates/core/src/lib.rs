//! Which-way complementarity in a Mach-Zehnder interferometer.
//!
//! A particle (a qubit: upper arm `|1⟩`, lower arm `|0⟩`) crosses the
//! interferometer while a quantum probe of arbitrary dimension records its
//! path. The crate evolves the joint state through the apparatus and computes
//! the particle's predictability, visibility and duality, the probe's
//! distinguishability, predictability `ℙ` and visibility `𝕍`, and the
//! particle-probe concurrence. Each quantity is obtained both from the
//! evolved state and from its closed form, so the two can be checked against
//! each other. A Ramsey-zone module treats a coherent cavity field as the
//! probe.
//!
//! Basis convention: the qubit is the leftmost tensor factor and is ordered
//! `|1⟩ = (1, 0)`, `|0⟩ = (0, 1)`, so `σ_z|1⟩ = |1⟩`.
//!
//! ```
//! use mz_duality::duality::balanced_report;
//!
//! let r = balanced_report(0.8203).unwrap();
//! assert!((r.probe_predictability - 0.3271).abs() < 5e-4);
//! assert!((r.probe_visibility - 0.4691).abs() < 5e-4);
//! ```

pub mod cli;
pub mod duality;
pub mod error;
pub mod interferometer;
pub mod linalg;
pub mod ramsey;
pub mod random;
pub mod roots;
pub mod tol;

pub use duality::{duality_report, ComplementarityReport, Regime, RegimeThresholds};
pub use error::{Error, Result};
pub use interferometer::{JointState, OverlapProbe, ParticleState, Probe, ProbeModel};
pub use ramsey::{ramsey_report, RamseyConfig, RamseyResult};
