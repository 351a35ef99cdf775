//! Complementarity quantities for the particle and the which-way probe.
//!
//! Each quantity is available from its closed form (`*_formula`, the
//! `FormulaValues` struct) and from the evolved joint state
//! ([`duality_report`]). The report always carries the state values.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interferometer::{
    build_initial, evolve_pre_detection, particle_predictability, scan_fringes, OverlapProbe,
    ParticleState, Probe, ProbeModel,
};
use crate::linalg::{
    concurrence_from_reduced, partial_trace_particle, partial_trace_probe, ComplexMatrix,
    ComplexVector,
};
use crate::roots::bisect;
use crate::tol;

/// Phase samples used for the fringe fit inside a report.
pub const REPORT_SCAN_POINTS: usize = 16;

fn check_overlap(gamma: Complex64) -> Result<f64> {
    let g2 = gamma.norm_sqr();
    if !g2.is_finite() || gamma.norm() > 1.0 + tol::CONSTRUCT {
        return Err(Error::BadOverlap(gamma.norm()));
    }
    Ok(g2.min(1.0))
}

/// `Q = 1 - |γ|²`, the probability that the probe reveals the path.
pub fn quality(gamma: Complex64) -> Result<f64> {
    Ok(1.0 - check_overlap(gamma)?)
}

/// `D = √Q`.
pub fn distinguishability(gamma: Complex64) -> Result<f64> {
    Ok(quality(gamma)?.sqrt())
}

/// `C = V₀·D`.
pub fn concurrence_formula(v0: f64, d: f64) -> f64 {
    v0 * d
}

/// `ℙ = 1 - (1 - P₁)·D²`.
pub fn probe_predictability_formula(p1: f64, d: f64) -> f64 {
    1.0 - (1.0 - p1) * d * d
}

/// `𝕍 = (1 - P₁)·D·√(1 - D²)`, at most 1/2.
pub fn probe_visibility(p1: f64, d: f64) -> f64 {
    (1.0 - p1) * d * (1.0 - d * d).max(0.0).sqrt()
}

/// `⟨Π⟩ = tr(ρ₂ |m⟩⟨m|) = ⟨m|ρ₂|m⟩`.
pub fn projector_average(rho2: &ComplexMatrix, m: &ComplexVector) -> Result<f64> {
    m.check_normalized(tol::DERIVED)?;
    let rm = rho2.apply(m)?;
    Ok(m.inner(&rm)?.re)
}

/// `|1 - 2⟨Π⟩|` for the projector onto `m`.
pub fn projector_predictability(rho2: &ComplexMatrix, m: &ComplexVector) -> Result<f64> {
    Ok((1.0 - 2.0 * projector_average(rho2, m)?).abs())
}

/// Probe predictability from projector averages on a single probe state.
///
/// Both `Π₊` and `Π₋` are evaluated; they agree whenever the two arms are
/// equally populated (`x₀ = 0`, or the Ramsey state). A disagreement above
/// 1e-6 is reported as [`Error::ProjectorAsymmetry`]. Returns the `Π₊` value.
pub fn probe_predictability_state(
    rho2: &ComplexMatrix,
    m_plus: &ComplexVector,
    m_minus: &ComplexVector,
) -> Result<f64> {
    probe_predictability_mirrored(rho2, rho2, m_plus, m_minus)
}

/// Probe predictability with the `±x₀ → |x₀|` remap.
///
/// `rho2_upper` is the probe state for a preparation whose dominant path is
/// the upper arm (`x₀ = -|x₀|`, probe mostly in `|m₊⟩`) and is read with
/// `Π₊`; `rho2_lower` is the mirrored preparation (`x₀ = +|x₀|`) read with
/// `Π₋`. The two values must agree; the `Π₊` value is returned.
pub fn probe_predictability_mirrored(
    rho2_upper: &ComplexMatrix,
    rho2_lower: &ComplexMatrix,
    m_plus: &ComplexVector,
    m_minus: &ComplexVector,
) -> Result<f64> {
    let plus = projector_predictability(rho2_upper, m_plus)?;
    let minus = projector_predictability(rho2_lower, m_minus)?;
    if (plus - minus).abs() > tol::PROJECTOR_ASYMMETRY {
        return Err(Error::ProjectorAsymmetry { plus, minus });
    }
    tol::clamp_unit(plus).ok_or_else(|| Error::OutOfRange(format!("probe predictability {plus}")))
}

/// Which-way regime of the probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Classical,
    Bad,
    Intermediate,
    Good,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Classical => "classical",
            Regime::Bad => "bad",
            Regime::Intermediate => "intermediate",
            Regime::Good => "good",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cut points in `D` separating the regimes for a balanced particle (`P₀ = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeThresholds {
    /// `1/√2`: good probe above.
    pub good_cut: f64,
    /// `(√5 - 1)/2`: `ℙ > C` below.
    pub bad_cut: f64,
    /// Root of `ℙ = 𝕍 + C`: classical below.
    pub classical_cut: f64,
}

impl RegimeThresholds {
    pub fn compute() -> Self {
        Self {
            good_cut: FRAC_1_SQRT_2,
            bad_cut: crossing_point(),
            classical_cut: classical_boundary(),
        }
    }

    /// Drop of the particle visibility `1 - √(1 - D*²)` across the classical region.
    pub fn delta_v(&self) -> f64 {
        1.0 - (1.0 - self.classical_cut.powi(2)).sqrt()
    }
}

/// `f(D) = 1 - D² - D√(1-D²) - D`, i.e. `ℙ - 𝕍 - C` at `P₀ = 0`.
pub fn classical_margin(d: f64) -> f64 {
    1.0 - d * d - d * (1.0 - d * d).max(0.0).sqrt() - d
}

/// Upper edge of the classical region, by bisection on `[0.3, 0.5]`.
pub fn classical_boundary() -> f64 {
    bisect(classical_margin, 0.3, 0.5, 1e-12, 200)
        .expect("classical_margin changes sign on [0.3, 0.5]")
}

/// Positive root of `D² + D - 1 = 0`, where `ℙ = C` at `P₀ = 0`.
pub fn crossing_point() -> f64 {
    // (√5 - 1)/2 written as 2/(√5 + 1) to avoid cancellation
    2.0 / (5f64.sqrt() + 1.0)
}

/// Regime label, precedence classical, bad, good, intermediate:
/// classical if `ℙ ≥ 𝕍 + C`, else bad if `ℙ > C`, else good if `D > 1/√2`.
pub fn classify(d: f64, report: &ComplementarityReport) -> Regime {
    let (pp, pv, c) = (
        report.probe_predictability,
        report.probe_visibility,
        report.concurrence,
    );
    if pp >= pv + c {
        Regime::Classical
    } else if pp > c {
        Regime::Bad
    } else if d > FRAC_1_SQRT_2 {
        Regime::Good
    } else {
        Regime::Intermediate
    }
}

/// All complementarity quantities for one particle/probe configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplementarityReport {
    /// P₍₁₎
    pub predictability_particle: f64,
    /// V₍₁₎
    pub visibility_particle: f64,
    /// V₀
    pub a_priori_visibility: f64,
    /// P₀
    pub a_priori_predictability: f64,
    /// Q
    pub quality: f64,
    /// D
    pub distinguishability: f64,
    /// C₍₁,₂₎
    pub concurrence: f64,
    /// ℙ
    pub probe_predictability: f64,
    /// 𝕍
    pub probe_visibility: f64,
    /// S₍₁₎² = P₍₁₎² + V₍₁₎²
    pub duality_particle: f64,
    /// S₍₂₎² = 2·tr(ρ₂²) - 1, from the purity of the probe state
    pub duality_probe: f64,
    pub regime: Regime,
}

impl ComplementarityReport {
    /// Largest violation among `S₁² + C² = 1`, `S₂² + C² = 1` and `ℙ² + 𝕍² = S₂²`.
    pub fn identity_residual(&self) -> f64 {
        let c2 = self.concurrence.powi(2);
        [
            (self.duality_particle + c2 - 1.0).abs(),
            (self.duality_probe + c2 - 1.0).abs(),
            (self.probe_predictability.powi(2) + self.probe_visibility.powi(2)
                - self.duality_probe)
                .abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Closed-form values for the same configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FormulaValues {
    pub predictability_particle: f64,
    pub visibility_particle: f64,
    pub concurrence: f64,
    pub probe_predictability: f64,
    pub probe_visibility: f64,
}

impl FormulaValues {
    pub fn new(p: &ParticleState, gamma: Complex64) -> Result<Self> {
        let d = distinguishability(gamma)?;
        let p1 = p.a_priori_predictability();
        let v0 = p.a_priori_visibility();
        Ok(Self {
            predictability_particle: p1,
            visibility_particle: v0 * (1.0 - d * d).sqrt(),
            concurrence: concurrence_formula(v0, d),
            probe_predictability: probe_predictability_formula(p1, d),
            probe_visibility: probe_visibility(p1, d),
        })
    }
}

/// Both routes side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerboseReport {
    pub state: ComplementarityReport,
    pub formula: FormulaValues,
}

fn unit(x: f64, what: &str) -> Result<f64> {
    tol::clamp_unit(x).ok_or_else(|| Error::OutOfRange(format!("{what} = {x}")))
}

fn probe_state_after(p: &ParticleState, probe: &ProbeModel) -> Result<ComplexMatrix> {
    let rho = evolve_pre_detection(&build_initial(p, probe), probe, 0.0)?;
    partial_trace_particle(&rho, probe.dim())
}

/// Evolves the configuration through the interferometer and measures every
/// quantity on the resulting states.
pub fn duality_report(p: &ParticleState, probe: impl Into<Probe>) -> Result<ComplementarityReport> {
    let probe = probe.into();
    let model = probe.model();
    let model = model.as_ref();
    let d = model.dim();

    let gamma = model.overlap().gamma();
    let q = quality(gamma)?;
    let dist = q.sqrt();

    let rho0 = build_initial(p, model);
    let p1 = unit(particle_predictability(&rho0, model, 0.0)?, "P1")?;
    let v1 = scan_fringes(&rho0, model, REPORT_SCAN_POINTS)?.visibility;

    let rho = evolve_pre_detection(&rho0, model, 0.0)?;
    let conc = concurrence_from_reduced(&partial_trace_probe(&rho, d)?)?;
    let rho2 = partial_trace_particle(&rho, d)?;
    let s2 = unit(2.0 * rho2.purity() - 1.0, "S2^2")?;

    let upper = probe_state_after(&p.with_x0_sign(-1.0), model)?;
    let lower = probe_state_after(&p.with_x0_sign(1.0), model)?;
    let pp = probe_predictability_mirrored(&upper, &lower, &model.m_plus(), &model.m_minus())?;
    // from the measured P₁ and D; ℙ² + 𝕍² = S₂² is then checked, not assumed
    let pv = probe_visibility(p1, dist);

    let mut report = ComplementarityReport {
        predictability_particle: p1,
        visibility_particle: v1,
        a_priori_visibility: p.a_priori_visibility(),
        a_priori_predictability: p.a_priori_predictability(),
        quality: q,
        distinguishability: dist,
        concurrence: conc,
        probe_predictability: pp,
        probe_visibility: pv,
        duality_particle: unit(p1 * p1 + v1 * v1, "S1^2")?,
        duality_probe: s2,
        regime: Regime::Classical,
    };
    report.regime = classify(dist, &report);
    Ok(report)
}

pub fn duality_report_verbose(p: &ParticleState, probe: impl Into<Probe>) -> Result<VerboseReport> {
    let probe = probe.into();
    let gamma = probe.model().overlap().gamma();
    Ok(VerboseReport {
        state: duality_report(p, probe)?,
        formula: FormulaValues::new(p, gamma)?,
    })
}

/// Report for a balanced particle (`u₀ = (0, 0, 1)`) and a probe of distinguishability `d`.
pub fn balanced_report(d: f64) -> Result<ComplementarityReport> {
    balanced_report_with(0.0, d)
}

/// Report for `u₀ = (p0, 0, √(1-p0²))` and a real overlap `γ = √(1-d²)`.
pub fn balanced_report_with(p0: f64, d: f64) -> Result<ComplementarityReport> {
    if !(0.0..=1.0).contains(&p0) || !(0.0..=1.0).contains(&d) {
        return Err(Error::OutOfRange(format!("p0 = {p0}, D = {d}")));
    }
    let p = ParticleState::new(p0, 0.0, (1.0 - p0 * p0).sqrt())?;
    duality_report(&p, OverlapProbe::real((1.0 - d * d).sqrt())?)
}
