//! Independent oracles shared by the integration tests. Nothing here calls
//! the crate's evolution or reduction routines.
#![allow(dead_code)]

use mz_duality::linalg::{ComplexMatrix, ComplexVector};
use mz_duality::{ParticleState, ProbeModel};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Kronecker product by decomposing each output index into factor indices.
pub fn kron_oracle(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (rows, cols) = (a.rows() * b.rows(), a.cols() * b.cols());
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for s in 0..cols {
            let (i, k) = (r / b.rows(), r % b.rows());
            let (j, l) = (s / b.cols(), s % b.cols());
            data.push(a[(i, j)] * b[(k, l)]);
        }
    }
    ComplexMatrix::from_vec(rows, cols, data).unwrap()
}

/// Reduced qubit state: accumulate every joint entry whose probe indices match.
pub fn trace_probe_oracle(rho: &ComplexMatrix, d: usize) -> [[Complex64; 2]; 2] {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for a in 0..2 * d {
        for b in 0..2 * d {
            if a % d == b % d {
                out[a / d][b / d] += rho[(a, b)];
            }
        }
    }
    out
}

/// Reduced probe state: accumulate every joint entry whose qubit indices match.
pub fn trace_particle_oracle(rho: &ComplexMatrix, d: usize) -> Vec<Vec<Complex64>> {
    let mut out = vec![vec![c(0.0, 0.0); d]; d];
    for a in 0..2 * d {
        for b in 0..2 * d {
            if a / d == b / d {
                out[a % d][b % d] += rho[(a, b)];
            }
        }
    }
    out
}

pub fn matrix_from_nested(m: &[Vec<Complex64>]) -> ComplexMatrix {
    let n = m.len();
    ComplexMatrix::from_vec(n, m[0].len(), m.iter().flatten().copied().collect()).unwrap()
}

pub fn matrix_from_2x2(m: [[Complex64; 2]; 2]) -> ComplexMatrix {
    ComplexMatrix::from_rows(&m)
}

/// `|ψ⟩⟨ψ|` entry by entry.
pub fn pure_density(psi: &ComplexVector) -> ComplexMatrix {
    let n = psi.dim();
    let mut data = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            data.push(psi[a] * psi[b].conj());
        }
    }
    ComplexMatrix::from_vec(n, n, data).unwrap()
}

/// Apparatus rebuilt from literal matrices and the oracle Kronecker product:
/// returns `(U_F U_P U_B, U_B U_F U_P U_B)`.
pub fn apparatus_oracle(probe: &ProbeModel, phi: f64) -> (ComplexMatrix, ComplexMatrix) {
    let d = probe.dim();
    let id = ComplexMatrix::identity(d);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    // 1 - iσ_y with σ_y = [[0, -i], [i, 0]] is [[1, -1], [1, 1]]
    let bs = ComplexMatrix::from_rows(&[[c(h, 0.0), c(-h, 0.0)], [c(h, 0.0), c(h, 0.0)]]);
    let ub = kron_oracle(&bs, &id);
    let p_upper =
        ComplexMatrix::from_rows(&[[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]);
    let p_lower =
        ComplexMatrix::from_rows(&[[c(0.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
    let up = &kron_oracle(&p_upper, probe.u_plus()) + &kron_oracle(&p_lower, probe.u_minus());
    let shift = ComplexMatrix::from_rows(&[
        [Complex64::from_polar(1.0, phi), c(0.0, 0.0)],
        [c(0.0, 0.0), c(1.0, 0.0)],
    ]);
    let uf = kron_oracle(&shift, &id);
    let mid = &(&uf * &up) * &ub;
    let full = &ub * &mid;
    (mid, full)
}

/// `⟨0|ρ₍₁₎|0⟩` from the fringe law `[1 + ½((z₀+iy₀)γ*e^{-iΦ} + (z₀-iy₀)γe^{iΦ})]/2`,
/// with `γ = ⟨m₋|m₊⟩`.
pub fn intensity_closed_form(p: &ParticleState, gamma: Complex64, phi: f64) -> f64 {
    let zy = c(p.z0(), p.y0());
    let e = Complex64::from_polar(1.0, phi);
    let cross = zy * gamma.conj() * e.conj() + zy.conj() * gamma * e;
    (1.0 + 0.5 * cross.re) / 2.0
}

/// Visibility of the closed-form fringe law, `V₀|γ|`.
pub fn visibility_closed_form(p: &ParticleState, gamma: Complex64) -> f64 {
    p.y0().hypot(p.z0()) * gamma.norm()
}
