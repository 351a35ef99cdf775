//! Random states, unitaries and configurations for sweeps and tests.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::interferometer::{ParticleState, ProbeModel};
use crate::linalg::{ComplexMatrix, ComplexVector};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniformly distributed unit vector in `C^dim`.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVector {
    loop {
        let v = ComplexVector::new((0..dim).map(|_| gaussian(rng)).collect()).expect("dim > 0");
        if v.norm() > 1e-6 {
            return v.unit().expect("nonzero");
        }
    }
}

/// Haar-random unitary: Gram-Schmidt on a complex Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex64> = (0..dim).map(|_| gaussian(rng)).collect();
        // two passes keep the columns orthogonal to machine precision
        for _ in 0..2 {
            for q in &cols {
                let p: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= p * qi;
                }
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n < 1e-8 {
            continue;
        }
        cols.push(v.into_iter().map(|z| z / n).collect());
    }
    let mut u = ComplexMatrix::zeros(dim, dim);
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            u[(i, j)] = *z;
        }
    }
    u
}

/// Uniform point on the unit Bloch sphere.
pub fn random_particle<R: Rng + ?Sized>(rng: &mut R) -> ParticleState {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            if let Ok(p) = ParticleState::new(v[0] / n, v[1] / n, v[2] / n) {
                return p;
            }
        }
    }
}

/// Random initial probe state and random conditional unitaries on `C^dim`.
pub fn random_probe<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ProbeModel {
    let m = random_state(rng, dim);
    let u_plus = random_unitary(rng, dim);
    let u_minus = random_unitary(rng, dim);
    ProbeModel::new(m, u_plus, u_minus).expect("random unitaries are unitary")
}
