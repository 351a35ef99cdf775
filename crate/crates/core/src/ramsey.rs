//! A Ramsey zone as a which-way probe: a two-level atom crosses a cavity
//! holding a coherent field and leaves after a π/2 pulse, entangled with the
//! field as `(|e⟩|α₊⟩ + |g⟩|α₋⟩)/√2`.
//!
//! The field lives in a truncated Fock space. `|e⟩` plays the role of the
//! interferometer's `|1⟩` and `|g⟩` of `|0⟩`. Times are in units of `1/Ω`.

use std::f64::consts::{PI, SQRT_2, TAU};

use num_complex::Complex64;

use crate::duality::{
    distinguishability, duality_report, probe_predictability_formula, probe_predictability_state,
    probe_visibility, ComplementarityReport,
};
use crate::error::{Error, Result};
use crate::interferometer::{JointState, OverlapProbe, ParticleState};
use crate::linalg::{concurrence_from_reduced, ket0, ket1, reduced_qubit, ComplexVector};
use crate::roots::{bisect, bracket_first};
use crate::tol;

/// Largest accepted mean photon number `|α|²`.
pub const MAX_ALPHA2: f64 = 100.0;

/// Tail bound on the Poisson weight discarded by the Fock truncation.
pub const FOCK_TAIL: f64 = 1e-12;

/// Hard ceiling on the cutoff search.
const MAX_CUTOFF: usize = 2000;

fn check_alpha(alpha: Complex64) -> Result<()> {
    let a2 = alpha.norm_sqr();
    if !a2.is_finite() || a2 > MAX_ALPHA2 {
        return Err(Error::AlphaTooLarge(a2));
    }
    Ok(())
}

/// Fock amplitudes `C_n = e^{-|α|²/2} αⁿ/√(n!)` for `n = 0..=cutoff`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentField {
    pub alpha: Complex64,
    pub cutoff: usize,
    pub coeffs: Vec<Complex64>,
}

impl CoherentField {
    pub fn with_cutoff(alpha: Complex64, cutoff: usize) -> Result<Self> {
        check_alpha(alpha)?;
        let mut coeffs = Vec::with_capacity(cutoff + 1);
        let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
        coeffs.push(c);
        for n in 1..=cutoff {
            c = c * alpha / (n as f64).sqrt();
            coeffs.push(c);
        }
        Ok(Self {
            alpha,
            cutoff,
            coeffs,
        })
    }

    /// Populations `|C_n|²`.
    pub fn populations(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Weight `1 - Σ|C_n|²` lost to the truncation.
    pub fn tail(&self) -> f64 {
        1.0 - self.populations().iter().sum::<f64>()
    }

    pub fn mean_photon_number(&self) -> f64 {
        self.populations()
            .iter()
            .enumerate()
            .map(|(n, p)| n as f64 * p)
            .sum()
    }
}

/// Smallest truncation whose discarded weight is at most `eps`.
pub fn coherent_field(alpha: Complex64, eps: f64) -> Result<CoherentField> {
    check_alpha(alpha)?;
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::OutOfRange(format!("eps = {eps}")));
    }
    let a = alpha.norm_sqr();
    let mut p = (-a).exp();
    let mut sum = p;
    let mut n = 0;
    while 1.0 - sum > eps && n < MAX_CUTOFF {
        n += 1;
        p *= a / n as f64;
        sum += p;
    }
    CoherentField::with_cutoff(alpha, n)
}

/// Field amplitude, vacuum Rabi frequency and Fock cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamseyConfig {
    alpha: Complex64,
    rabi: f64,
    cutoff: usize,
}

impl RamseyConfig {
    /// Cutoff floor `10·(1 + |α|²)`.
    pub fn min_cutoff(alpha: Complex64) -> usize {
        (10.0 * (1.0 + alpha.norm_sqr())).ceil() as usize
    }

    /// Picks the smallest cutoff meeting the tail bound, but never below the floor.
    pub fn new(alpha: Complex64, rabi: f64) -> Result<Self> {
        let tail_cutoff = coherent_field(alpha, FOCK_TAIL)?.cutoff;
        Self::with_cutoff(alpha, rabi, tail_cutoff.max(Self::min_cutoff(alpha)))
    }

    /// Real amplitude `α = √(|α|²)`.
    pub fn from_alpha2(alpha2: f64, rabi: f64) -> Result<Self> {
        if alpha2 > MAX_ALPHA2 {
            return Err(Error::AlphaTooLarge(alpha2));
        }
        if alpha2.is_nan() || alpha2 < 0.0 {
            return Err(Error::OutOfRange(format!("|alpha|^2 = {alpha2}")));
        }
        Self::new(Complex64::new(alpha2.sqrt(), 0.0), rabi)
    }

    pub fn with_cutoff(alpha: Complex64, rabi: f64, cutoff: usize) -> Result<Self> {
        check_alpha(alpha)?;
        if !(rabi > 0.0 && rabi.is_finite()) {
            return Err(Error::OutOfRange(format!("Rabi frequency {rabi}")));
        }
        if cutoff < Self::min_cutoff(alpha) {
            return Err(Error::OutOfRange(format!(
                "cutoff {cutoff} below floor {}",
                Self::min_cutoff(alpha)
            )));
        }
        Ok(Self {
            alpha,
            rabi,
            cutoff,
        })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn rabi(&self) -> f64 {
        self.rabi
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn field(&self) -> CoherentField {
        CoherentField::with_cutoff(self.alpha, self.cutoff).expect("alpha checked at construction")
    }

    /// `Σ|C_n|² cos²(Ω√(n+1)t)`, the excited-state population after time `t`.
    pub fn excited_population(&self, t: f64) -> f64 {
        self.field()
            .populations()
            .iter()
            .enumerate()
            .map(|(n, p)| p * (self.rabi * ((n + 1) as f64).sqrt() * t).cos().powi(2))
            .sum()
    }

    /// `Σ|C_n|² sin²(Ω√(n+1)t)`.
    pub fn ground_population(&self, t: f64) -> f64 {
        self.field()
            .populations()
            .iter()
            .enumerate()
            .map(|(n, p)| p * (self.rabi * ((n + 1) as f64).sqrt() * t).sin().powi(2))
            .sum()
    }
}

/// First positive `t` with `Σ|C_n|² cos²(Ω√(n+1)t) = 1/2`.
pub fn pulse_time(cfg: &RamseyConfig) -> Result<f64> {
    let f = |t: f64| cfg.excited_population(t) - 0.5;
    let step = PI / (40.0 * cfg.rabi * ((cfg.cutoff + 1) as f64).sqrt());
    let (a, b) = bracket_first(f, 0.0, TAU / cfg.rabi, step)
        .ok_or_else(|| Error::NoRoot("population never reaches 1/2 within 2π/Ω".into()))?;
    bisect(f, a, b, 1e-12 * b, 200)
}

/// `|α₊⟩ = √2 Σ C_n cos(Ω√(n+1)t)|n⟩` and `|α₋⟩ = √2 Σ C_n sin(Ω√(n+1)t)|n+1⟩`,
/// both in a space of dimension `cutoff + 2`. The √2 makes them unit vectors
/// only at a π/2 pulse; elsewhere this returns [`Error::NormalizationBroken`].
pub fn post_interaction_states(
    cfg: &RamseyConfig,
    t: f64,
) -> Result<(ComplexVector, ComplexVector)> {
    let field = cfg.field();
    let dim = cfg.cutoff + 2;
    let mut plus = ComplexVector::zeros(dim);
    let mut minus = ComplexVector::zeros(dim);
    for (n, c) in field.coeffs.iter().enumerate() {
        let theta = cfg.rabi * ((n + 1) as f64).sqrt() * t;
        plus[n] = c * (SQRT_2 * theta.cos());
        minus[n + 1] = c * (SQRT_2 * theta.sin());
    }
    for (name, v) in [("alpha+", &plus), ("alpha-", &minus)] {
        if (v.norm() - 1.0).abs() > 1e-6 {
            return Err(Error::NormalizationBroken(format!(
                "|{name}| = {}",
                v.norm()
            )));
        }
    }
    Ok((plus, minus))
}

/// Atom-field state `(|e⟩|α₊⟩ + |g⟩|α₋⟩)/√2`.
pub fn global_state(plus: &ComplexVector, minus: &ComplexVector) -> Result<JointState> {
    let s = Complex64::new(1.0 / SQRT_2, 0.0);
    let e = ket1().kron(plus);
    let g = ket0().kron(minus);
    let psi = e
        .entries()
        .iter()
        .zip(g.entries())
        .map(|(a, b)| (a + b) * s)
        .collect();
    JointState::new(ComplexVector::new(psi)?)
}

/// Outcome of one atom crossing the Ramsey zone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamseyResult {
    pub alpha: Complex64,
    pub cutoff: usize,
    pub t_i: f64,
    /// `⟨α₋|α₊⟩`
    pub overlap: Complex64,
    pub distinguishability: f64,
    pub probe_predictability: f64,
    pub probe_visibility: f64,
    pub concurrence: f64,
}

impl RamseyResult {
    /// `|ℙ² + 𝕍² + C² - 1|`.
    pub fn identity_residual(&self) -> f64 {
        (self.probe_predictability.powi(2)
            + self.probe_visibility.powi(2)
            + self.concurrence.powi(2)
            - 1.0)
            .abs()
    }

    /// The field after the cavity has relaxed back to `|α⟩`: both conditional
    /// states coincide, so `D = 0`.
    pub fn relaxed(&self) -> Self {
        Self {
            overlap: Complex64::new(1.0, 0.0),
            distinguishability: 0.0,
            probe_predictability: 1.0,
            probe_visibility: 0.0,
            concurrence: 0.0,
            ..*self
        }
    }
}

/// Pulse time, post-interaction field states and the probe's complementarity
/// numbers. The atom's paths are balanced by the π/2 pulse, so `P₁ = 0`.
pub fn ramsey_report(cfg: &RamseyConfig) -> Result<RamseyResult> {
    let t_i = pulse_time(cfg)?;
    let (plus, minus) = post_interaction_states(cfg, t_i)?;
    let overlap = minus.inner(&plus)?;
    let gamma = if overlap.norm() > 1.0 && overlap.norm() <= 1.0 + tol::CONSTRUCT {
        overlap / overlap.norm()
    } else {
        overlap
    };
    let dist = distinguishability(gamma)?;

    let phi = global_state(&plus, &minus)?;
    let concurrence = concurrence_from_reduced(&reduced_qubit(phi.psi())?)?;

    let rho2 = (&plus.projector() + &minus.projector()).scale(Complex64::new(0.5, 0.0));
    let pp_state = probe_predictability_state(&rho2, &plus.unit()?, &minus.unit()?)?;
    let pp_formula = probe_predictability_formula(0.0, dist);
    if (pp_state - pp_formula).abs() > tol::PROJECTOR_ASYMMETRY {
        return Err(Error::OutOfRange(format!(
            "projector route {pp_state} disagrees with formula {pp_formula}"
        )));
    }

    Ok(RamseyResult {
        alpha: cfg.alpha,
        cutoff: cfg.cutoff,
        t_i,
        overlap,
        distinguishability: dist,
        probe_predictability: pp_state,
        probe_visibility: probe_visibility(0.0, dist),
        concurrence,
    })
}

/// Complementarity report once the zone has relaxed: `ℙ = 1`, `𝕍 = C = 0`, classical.
pub fn relaxation_reset(result: &RamseyResult) -> ComplementarityReport {
    let atom = ParticleState::new(0.0, 0.0, 1.0).expect("unit Bloch vector");
    let restored = OverlapProbe::new(result.relaxed().overlap).expect("unit overlap");
    duality_report(&atom, restored).expect("idle probe report")
}
