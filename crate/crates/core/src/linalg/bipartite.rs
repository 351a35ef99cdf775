//! Qubit ⊗ probe operations: Pauli matrices, partial traces, Schmidt
//! coefficients and pure-state concurrence.
//!
//! Basis convention, used throughout the crate: the qubit is the slow
//! (leftmost) tensor factor and its basis is ordered `|1⟩, |0⟩`, i.e.
//! `|1⟩ = (1, 0)` and `|0⟩ = (0, 1)`. Then `σ_z|1⟩ = +|1⟩`, and `|1⟩` is the
//! upper interferometer arm. A joint index is `q·d + k` with `q` the qubit
//! row (0 for `|1⟩`) and `k` the probe index.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector};
use crate::tol;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Index of `|1⟩` (upper arm) in a qubit vector.
pub const UPPER: usize = 0;
/// Index of `|0⟩` (lower arm) in a qubit vector.
pub const LOWER: usize = 1;

pub fn ket1() -> ComplexVector {
    ComplexVector::basis(2, UPPER)
}

pub fn ket0() -> ComplexVector {
    ComplexVector::basis(2, LOWER)
}

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ONE], [ONE, ZERO]])
}

/// `σ_y = -i|1⟩⟨0| + i|0⟩⟨1|`.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, -I], [I, ZERO]])
}

/// `σ_z = |1⟩⟨1| - |0⟩⟨0|`.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ONE, ZERO], [ZERO, -ONE]])
}

/// `σ₋ = |0⟩⟨1|`.
pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ZERO], [ONE, ZERO]])
}

/// `(1 + u·σ)/2`.
pub fn qubit_density(u: [f64; 3]) -> ComplexMatrix {
    let [x, y, z] = u;
    ComplexMatrix::from_rows(&[
        [
            Complex64::new((1.0 + z) / 2.0, 0.0),
            Complex64::new(x / 2.0, -y / 2.0),
        ],
        [
            Complex64::new(x / 2.0, y / 2.0),
            Complex64::new((1.0 - z) / 2.0, 0.0),
        ],
    ])
}

/// Bloch vector `(⟨σ_x⟩, ⟨σ_y⟩, ⟨σ_z⟩)` of a 2×2 state.
pub fn bloch_vector(rho: &ComplexMatrix) -> Result<[f64; 3]> {
    check_dims(rho, 2, 2)?;
    let off = rho[(0, 1)];
    Ok([2.0 * off.re, -2.0 * off.im, (rho[(0, 0)] - rho[(1, 1)]).re])
}

/// `⟨σ₋⟩ = tr(ρ σ₋)`.
pub fn expect_sigma_minus(rho: &ComplexMatrix) -> Result<Complex64> {
    check_dims(rho, 2, 2)?;
    Ok(rho[(0, 1)])
}

fn check_dims(m: &ComplexMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::BadDims(format!(
            "expected {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_joint(rho: &ComplexMatrix, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::BadDims("probe dimension 0".into()));
    }
    check_dims(rho, 2 * d, 2 * d)
}

/// Traces out the probe: `ρ⁽¹⁾[i][j] = Σ_k ρ[(i,k),(j,k)]`.
pub fn partial_trace_probe(rho: &ComplexMatrix, d: usize) -> Result<ComplexMatrix> {
    check_joint(rho, d)?;
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = (0..d).map(|k| rho[(i * d + k, j * d + k)]).sum();
        }
    }
    Ok(out)
}

/// Traces out the qubit: `ρ⁽²⁾[k][l] = Σ_q ρ[(q,k),(q,l)]`.
pub fn partial_trace_particle(rho: &ComplexMatrix, d: usize) -> Result<ComplexMatrix> {
    check_joint(rho, d)?;
    let mut out = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        for l in 0..d {
            out[(k, l)] = rho[(k, l)] + rho[(d + k, d + l)];
        }
    }
    Ok(out)
}

/// Reduced qubit state of a pure joint vector, without forming `|ψ⟩⟨ψ|`.
pub fn reduced_qubit(psi: &ComplexVector) -> Result<ComplexMatrix> {
    if psi.dim() < 2 || !psi.dim().is_multiple_of(2) {
        return Err(Error::BadDims(format!("dim {} is not 2·d", psi.dim())));
    }
    let d = psi.dim() / 2;
    let e = psi.entries();
    let (upper, lower) = e.split_at(d);
    let dot = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
        a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
    };
    let mut out = ComplexMatrix::zeros(2, 2);
    out[(0, 0)] = dot(upper, upper);
    out[(0, 1)] = dot(upper, lower);
    out[(1, 0)] = dot(lower, upper);
    out[(1, 1)] = dot(lower, lower);
    Ok(out)
}

/// Squared Schmidt coefficients of a qubit ⊗ probe pure state, `λ₁ ≥ λ₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtPair {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl SchmidtPair {
    /// Eigenvalues of a 2×2 density matrix from its trace and determinant.
    pub fn from_reduced(rho1: &ComplexMatrix) -> Result<Self> {
        check_dims(rho1, 2, 2)?;
        let t = rho1.trace().re;
        let det = rho1.det2()?.re;
        let disc = t * t - 4.0 * det;
        if disc < -tol::DERIVED {
            return Err(Error::NotADensity(format!("discriminant {disc}")));
        }
        let root = disc.max(0.0).sqrt();
        let lambda1 = (t + root) / 2.0;
        let lambda2 = ((t - root) / 2.0).max(0.0);
        Ok(Self { lambda1, lambda2 })
    }

    /// `(λ₁ - λ₂)²`, the duality `P² + V²` of either subsystem.
    pub fn duality(&self) -> f64 {
        (self.lambda1 - self.lambda2).powi(2)
    }

    /// Concurrence `2√(λ₁λ₂)`.
    pub fn concurrence(&self) -> f64 {
        2.0 * (self.lambda1 * self.lambda2).sqrt()
    }
}

pub fn schmidt_coefficients(psi: &ComplexVector) -> Result<SchmidtPair> {
    psi.check_normalized(tol::CONSTRUCT)?;
    SchmidtPair::from_reduced(&reduced_qubit(psi)?)
}

/// `C = √(4 det ρ⁽¹⁾)`. Valid only when `rho1` is the reduced state of a
/// pure joint state; mixed-state concurrence is not provided.
pub fn concurrence_from_reduced(rho1: &ComplexMatrix) -> Result<f64> {
    let det = rho1.det2()?.re;
    if det < -tol::CLAMP {
        return Err(Error::NotADensity(format!("det {det} < 0")));
    }
    let c = (4.0 * det.max(0.0)).sqrt();
    tol::clamp_unit(c).ok_or_else(|| Error::NotADensity(format!("concurrence {c} > 1")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_algebra_matches_convention() {
        let z1 = sigma_z().apply(&ket1()).unwrap();
        assert_eq!(z1, ket1());
        // σ_y|1⟩ = i|0⟩ from σ_y = -i|1⟩⟨0| + i|0⟩⟨1|
        let y1 = sigma_y().apply(&ket1()).unwrap();
        assert_eq!(y1, ket0().scale(I));
        assert_eq!(sigma_minus().apply(&ket1()).unwrap(), ket0());
    }

    #[test]
    fn bloch_round_trip() {
        let u = [0.48, -0.6, 0.64];
        let b = bloch_vector(&qubit_density(u)).unwrap();
        for (a, e) in b.iter().zip(u) {
            assert!((a - e).abs() < 1e-15);
        }
    }

    #[test]
    fn partial_traces_reject_bad_dims() {
        let rho = ComplexMatrix::identity(5);
        assert!(matches!(
            partial_trace_probe(&rho, 2),
            Err(Error::BadDims(_))
        ));
        assert!(matches!(
            partial_trace_particle(&rho, 3),
            Err(Error::BadDims(_))
        ));
    }

    #[test]
    fn product_state_traces() {
        let m = ComplexVector::normalized(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let rho = ket0().projector().kron(&m.projector());
        assert!(
            partial_trace_probe(&rho, 2)
                .unwrap()
                .max_abs_diff(&ket0().projector())
                < 1e-15
        );
        let rho = ket1().projector().kron(&m.projector());
        assert!(
            partial_trace_particle(&rho, 2)
                .unwrap()
                .max_abs_diff(&m.projector())
                < 1e-15
        );
    }

    #[test]
    fn bell_like_state_is_maximally_mixed() {
        let s = 1.0 / 2f64.sqrt();
        let mp = ComplexVector::basis(2, 0);
        let mm = ComplexVector::basis(2, 1);
        let psi = ket1().kron(&mp).scale(c(s, 0.0));
        let psi2 = ket0().kron(&mm).scale(c(s, 0.0));
        let psi = ComplexVector::new(
            psi.entries()
                .iter()
                .zip(psi2.entries())
                .map(|(a, b)| a + b)
                .collect(),
        )
        .unwrap();
        let rho = psi.projector();
        let half = ComplexMatrix::identity(2).scale(c(0.5, 0.0));
        assert!(partial_trace_probe(&rho, 2).unwrap().max_abs_diff(&half) < 1e-15);
        assert!(partial_trace_particle(&rho, 2).unwrap().max_abs_diff(&half) < 1e-15);
        let sp = schmidt_coefficients(&psi).unwrap();
        assert!((sp.lambda1 - 0.5).abs() < 1e-12 && (sp.lambda2 - 0.5).abs() < 1e-12);
        assert!((concurrence_from_reduced(&half).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn schmidt_of_product_state() {
        let m = ComplexVector::normalized(vec![c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let sp = schmidt_coefficients(&ket1().kron(&m)).unwrap();
        assert_eq!((sp.lambda1, sp.lambda2), (1.0, 0.0));
    }

    #[test]
    fn schmidt_rejects_unnormalized() {
        let v = ComplexVector::from_real(&[1.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            schmidt_coefficients(&v),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn concurrence_examples() {
        assert_eq!(concurrence_from_reduced(&ket1().projector()).unwrap(), 0.0);
        let r = ComplexMatrix::diagonal(&[c(0.8, 0.0), c(0.2, 0.0)]);
        assert!((concurrence_from_reduced(&r).unwrap() - 0.8).abs() < 1e-15);
        let bad = ComplexMatrix::diagonal(&[c(1.5, 0.0), c(-0.5, 0.0)]);
        assert!(matches!(
            concurrence_from_reduced(&bad),
            Err(Error::NotADensity(_))
        ));
    }
}
