//! Mach-Zehnder interferometer with a which-way probe in one or both arms.
//!
//! The apparatus acts on `qubit ⊗ probe` with
//!
//! * `U_B = (1 - iσ_y)/√2 ⊗ 1` for each beam splitter,
//! * `U_P = |1⟩⟨1| ⊗ U₊ + |0⟩⟨0| ⊗ U₋` for the probe interaction,
//! * `U_F = (e^{iΦ}|1⟩⟨1| + |0⟩⟨0|) ⊗ 1` for the relative phase,
//!
//! applied in the order `U_B`, `U_P`, `U_F`, `U_B`. Mirrors are taken as
//! identity. Every observable here comes from explicit matrix products on the
//! joint density matrix; closed forms are only used by the tests.

use std::borrow::Cow;
use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    bloch_vector, partial_trace_probe, qubit_density, ComplexMatrix, ComplexVector, LOWER, UPPER,
};
use crate::tol;

/// Bloch vector `u₀ = (x₀, y₀, z₀)` of the particle entering the first beam splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleState {
    x0: f64,
    y0: f64,
    z0: f64,
}

impl ParticleState {
    /// Only pure preparations are accepted: `|u₀| = 1` within 1e-12.
    pub fn new(x0: f64, y0: f64, z0: f64) -> Result<Self> {
        let norm = (x0 * x0 + y0 * y0 + z0 * z0).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > tol::CONSTRUCT {
            return Err(Error::BlochNorm(norm));
        }
        Ok(Self { x0, y0, z0 })
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn y0(&self) -> f64 {
        self.y0
    }

    pub fn z0(&self) -> f64 {
        self.z0
    }

    pub fn bloch(&self) -> [f64; 3] {
        [self.x0, self.y0, self.z0]
    }

    /// `P₀ = |x₀|`, the predictability of the bare interferometer.
    pub fn a_priori_predictability(&self) -> f64 {
        self.x0.abs()
    }

    /// `V₀ = √(y₀² + z₀²)`, the visibility of the bare interferometer.
    pub fn a_priori_visibility(&self) -> f64 {
        self.y0.hypot(self.z0)
    }

    /// Same state with `x₀` replaced by `sign·|x₀|`.
    pub fn with_x0_sign(&self, sign: f64) -> Self {
        Self {
            x0: sign.signum() * self.x0.abs(),
            ..*self
        }
    }

    pub fn density(&self) -> ComplexMatrix {
        qubit_density(self.bloch())
    }
}

/// Overlap `γ = ⟨m₋|m₊⟩` of the two conditional probe states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapProbe {
    gamma: Complex64,
}

impl OverlapProbe {
    pub fn new(gamma: Complex64) -> Result<Self> {
        let g = gamma.norm();
        if !g.is_finite() || g > 1.0 + tol::CONSTRUCT {
            return Err(Error::BadOverlap(g));
        }
        Ok(Self { gamma })
    }

    pub fn real(gamma: f64) -> Result<Self> {
        Self::new(Complex64::new(gamma, 0.0))
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    /// `|m₊⟩ = (1, 0)`, `|m₋⟩ = (γ*, √(1-|γ|²))`.
    pub fn canonical_states(&self) -> (ComplexVector, ComplexVector) {
        let s = (1.0 - self.gamma.norm_sqr()).max(0.0).sqrt();
        let plus = ComplexVector::basis(2, 0);
        let minus = ComplexVector::new(vec![self.gamma.conj(), Complex64::new(s, 0.0)])
            .expect("two entries");
        (plus, minus)
    }

    /// Two-dimensional probe with `|m⟩ = (1, 0)`, `U₊ = 1` and `U₋` mapping
    /// `|m⟩` to the canonical `|m₋⟩`.
    pub fn to_probe_model(&self) -> ProbeModel {
        let s = Complex64::new((1.0 - self.gamma.norm_sqr()).max(0.0).sqrt(), 0.0);
        let g = self.gamma;
        let u_minus = ComplexMatrix::from_rows(&[[g.conj(), -s], [s, g]]);
        ProbeModel {
            m: ComplexVector::basis(2, 0),
            u_plus: ComplexMatrix::identity(2),
            u_minus,
        }
    }
}

/// Initial probe state `|m⟩` and the conditional unitaries `U±`, `U±|m⟩ = |m±⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeModel {
    m: ComplexVector,
    u_plus: ComplexMatrix,
    u_minus: ComplexMatrix,
}

impl ProbeModel {
    pub fn new(m: ComplexVector, u_plus: ComplexMatrix, u_minus: ComplexMatrix) -> Result<Self> {
        let d = m.dim();
        if d > tol::MAX_PROBE_DIM {
            return Err(Error::BadDims(format!(
                "probe dimension {d} exceeds {}",
                tol::MAX_PROBE_DIM
            )));
        }
        for u in [&u_plus, &u_minus] {
            if u.rows() != d || u.cols() != d {
                return Err(Error::BadDims(format!(
                    "{}x{} unitary for a dim-{d} probe",
                    u.rows(),
                    u.cols()
                )));
            }
            if !u.is_unitary(tol::CONSTRUCT) {
                return Err(Error::NotUnitary("conditional probe unitary".into()));
            }
        }
        m.check_normalized(tol::CONSTRUCT)?;
        Ok(Self { m, u_plus, u_minus })
    }

    /// Probe that never records the path: `U₊ = U₋ = 1`.
    pub fn idle(m: ComplexVector) -> Result<Self> {
        let d = m.dim();
        Self::new(m, ComplexMatrix::identity(d), ComplexMatrix::identity(d))
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn initial(&self) -> &ComplexVector {
        &self.m
    }

    pub fn u_plus(&self) -> &ComplexMatrix {
        &self.u_plus
    }

    pub fn u_minus(&self) -> &ComplexMatrix {
        &self.u_minus
    }

    pub fn m_plus(&self) -> ComplexVector {
        self.u_plus
            .apply(&self.m)
            .expect("dims checked at construction")
    }

    pub fn m_minus(&self) -> ComplexVector {
        self.u_minus
            .apply(&self.m)
            .expect("dims checked at construction")
    }

    pub fn overlap(&self) -> OverlapProbe {
        let g = self.m_minus().inner(&self.m_plus()).expect("same dims");
        OverlapProbe::new(g).expect("overlap of unit vectors")
    }
}

impl From<OverlapProbe> for ProbeModel {
    fn from(o: OverlapProbe) -> Self {
        o.to_probe_model()
    }
}

/// Either a full probe model or only its overlap.
#[derive(Debug, Clone, PartialEq)]
pub enum Probe {
    Overlap(OverlapProbe),
    Model(ProbeModel),
}

impl Probe {
    /// The model itself, or the canonical two-dimensional realization of an overlap.
    pub fn model(&self) -> Cow<'_, ProbeModel> {
        match self {
            Probe::Overlap(o) => Cow::Owned(o.to_probe_model()),
            Probe::Model(m) => Cow::Borrowed(m),
        }
    }
}

impl From<OverlapProbe> for Probe {
    fn from(o: OverlapProbe) -> Self {
        Probe::Overlap(o)
    }
}

impl From<ProbeModel> for Probe {
    fn from(m: ProbeModel) -> Self {
        Probe::Model(m)
    }
}

/// Pure `qubit ⊗ probe` state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    psi: ComplexVector,
}

impl JointState {
    pub fn new(psi: ComplexVector) -> Result<Self> {
        if !psi.dim().is_multiple_of(2) {
            return Err(Error::BadDims(format!(
                "joint dimension {} is odd",
                psi.dim()
            )));
        }
        psi.check_normalized(tol::CONSTRUCT)?;
        Ok(Self { psi })
    }

    pub fn product(qubit: &ComplexVector, probe: &ComplexVector) -> Result<Self> {
        if qubit.dim() != 2 {
            return Err(Error::BadDims(format!("qubit of dim {}", qubit.dim())));
        }
        Self::new(qubit.kron(probe))
    }

    pub fn psi(&self) -> &ComplexVector {
        &self.psi
    }

    pub fn probe_dim(&self) -> usize {
        self.psi.dim() / 2
    }

    pub fn evolve(&self, u: &ComplexMatrix) -> Result<Self> {
        let psi = u.apply(&self.psi)?;
        // unitary evolution preserves the norm up to rounding
        psi.check_normalized(tol::DERIVED)?;
        Ok(Self { psi })
    }

    pub fn density(&self) -> ComplexMatrix {
        self.psi.projector()
    }
}

/// `(1 - iσ_y)/√2`: `|1⟩ → (|1⟩ + |0⟩)/√2`, `|0⟩ → (|0⟩ - |1⟩)/√2`.
pub fn beam_splitter_qubit() -> ComplexMatrix {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    ComplexMatrix::from_rows(&[[s, -s], [s, s]])
}

/// `U_B` on `C² ⊗ C^d`.
pub fn beam_splitter(d: usize) -> ComplexMatrix {
    beam_splitter_qubit().kron(&ComplexMatrix::identity(d))
}

/// `U_P = |1⟩⟨1| ⊗ U₊ + |0⟩⟨0| ⊗ U₋`.
pub fn probe_coupling(probe: &ProbeModel) -> ComplexMatrix {
    let d = probe.dim();
    let mut u = ComplexMatrix::zeros(2 * d, 2 * d);
    for (q, block) in [(UPPER, probe.u_plus()), (LOWER, probe.u_minus())] {
        for i in 0..d {
            for j in 0..d {
                u[(q * d + i, q * d + j)] = block[(i, j)];
            }
        }
    }
    u
}

/// `U_F = (e^{iΦ}|1⟩⟨1| + |0⟩⟨0|) ⊗ 1`.
pub fn phase_shifter(phi: f64, d: usize) -> ComplexMatrix {
    let mut diag = vec![Complex64::new(1.0, 0.0); 2 * d];
    for z in &mut diag[UPPER * d..(UPPER + 1) * d] {
        *z = Complex64::from_polar(1.0, phi);
    }
    ComplexMatrix::diagonal(&diag)
}

/// `ρ₀ = (1 + u₀·σ)/2 ⊗ |m⟩⟨m|`.
pub fn build_initial(p: &ParticleState, probe: &ProbeModel) -> ComplexMatrix {
    p.density().kron(&probe.initial().projector())
}

fn check_rho0(rho0: &ComplexMatrix, probe: &ProbeModel) -> Result<()> {
    let n = 2 * probe.dim();
    if rho0.rows() != n || rho0.cols() != n {
        return Err(Error::BadDims(format!(
            "{}x{} state for a dim-{} probe",
            rho0.rows(),
            rho0.cols(),
            probe.dim()
        )));
    }
    Ok(())
}

/// `U_F U_P U_B`, the evolution up to the second beam splitter.
pub fn mid_unitary(probe: &ProbeModel, phi: f64) -> ComplexMatrix {
    let d = probe.dim();
    &(&phase_shifter(phi, d) * &probe_coupling(probe)) * &beam_splitter(d)
}

/// `U_B U_F U_P U_B`, the full apparatus.
pub fn full_unitary(probe: &ProbeModel, phi: f64) -> ComplexMatrix {
    &beam_splitter(probe.dim()) * &mid_unitary(probe, phi)
}

/// Joint state immediately before the second beam splitter.
pub fn evolve_mid(rho0: &ComplexMatrix, probe: &ProbeModel, phi: f64) -> Result<ComplexMatrix> {
    check_rho0(rho0, probe)?;
    rho0.conjugate_by(&mid_unitary(probe, phi))
}

/// Joint state after the second beam splitter, before detection.
pub fn evolve_pre_detection(
    rho0: &ComplexMatrix,
    probe: &ProbeModel,
    phi: f64,
) -> Result<ComplexMatrix> {
    check_rho0(rho0, probe)?;
    rho0.conjugate_by(&full_unitary(probe, phi))
}

/// `⟨0|ρ₍₁₎|0⟩`, the probability of detection in the lower output port.
/// Lies in `[0, 1]`; twice this value is the fringe law `1 + Re[(z₀ - iy₀)γ e^{iΦ}]`.
pub fn detector_intensity(rho0: &ComplexMatrix, probe: &ProbeModel, phi: f64) -> Result<f64> {
    let rho = evolve_pre_detection(rho0, probe, phi)?;
    let rho1 = partial_trace_probe(&rho, probe.dim())?;
    Ok(rho1[(LOWER, LOWER)].re)
}

/// Reduced particle state before the second beam splitter.
pub fn particle_state_mid(
    rho0: &ComplexMatrix,
    probe: &ProbeModel,
    phi: f64,
) -> Result<ComplexMatrix> {
    partial_trace_probe(&evolve_mid(rho0, probe, phi)?, probe.dim())
}

/// Particle predictability `|⟨σ_z⟩|` just before the second beam splitter.
pub fn particle_predictability(rho0: &ComplexMatrix, probe: &ProbeModel, phi: f64) -> Result<f64> {
    let [_, _, z] = bloch_vector(&particle_state_mid(rho0, probe, phi)?)?;
    Ok(z.abs())
}

/// Fringe pattern sampled on a uniform grid of `Φ ∈ [0, 2π)`.
///
/// The pattern is exactly `a + b·cos(Φ - Φ₀)`; `i_max` and `i_min` are the
/// extremes `a ± |b|` of that first-harmonic fit, so they bound the sampled
/// intensities and coincide with them when the grid hits the extremum.
#[derive(Debug, Clone, PartialEq)]
pub struct FringeScan {
    pub phis: Vec<f64>,
    pub intensities: Vec<f64>,
    pub i_max: f64,
    pub i_min: f64,
    pub visibility: f64,
    /// Φ₀ of the fit, in `(-π, π]`.
    pub phase: f64,
}

impl FringeScan {
    /// Fits `a + b·cos(Φ - Φ₀)` by projecting on the zeroth and first harmonics.
    pub fn from_samples(phis: Vec<f64>, intensities: Vec<f64>) -> Result<Self> {
        let n = intensities.len();
        if n < 8 {
            return Err(Error::TooFewSamples(n));
        }
        if phis.len() != n {
            return Err(Error::BadDims(format!(
                "{} phases, {n} intensities",
                phis.len()
            )));
        }
        let mean = intensities.iter().sum::<f64>() / n as f64;
        let first: Complex64 = phis
            .iter()
            .zip(&intensities)
            .map(|(&phi, &i)| Complex64::from_polar(i, -phi))
            .sum::<Complex64>()
            * (2.0 / n as f64);
        let amp = first.norm();
        let (i_max, i_min) = (mean + amp, mean - amp);
        let visibility = if i_max + i_min == 0.0 {
            0.0
        } else {
            ((i_max - i_min) / (i_max + i_min)).clamp(0.0, 1.0)
        };
        Ok(Self {
            phis,
            intensities,
            i_max,
            i_min,
            visibility,
            phase: first.arg(),
        })
    }

    pub fn sampled_max(&self) -> f64 {
        self.intensities
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn sampled_min(&self) -> f64 {
        self.intensities
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Intensity at `n_points` phases `2πk/n` and the fitted fringe visibility.
pub fn scan_fringes(
    rho0: &ComplexMatrix,
    probe: &ProbeModel,
    n_points: usize,
) -> Result<FringeScan> {
    if n_points < 8 {
        return Err(Error::TooFewSamples(n_points));
    }
    check_rho0(rho0, probe)?;
    let phis: Vec<f64> = (0..n_points)
        .map(|k| TAU * k as f64 / n_points as f64)
        .collect();
    let intensities = phis
        .iter()
        .map(|&phi| detector_intensity(rho0, probe, phi))
        .collect::<Result<Vec<_>>>()?;
    FringeScan::from_samples(phis, intensities)
}
