//! Minimal dense complex linear algebra for `C² ⊗ C^d` pure states.

mod bipartite;
mod matrix;
mod vector;

pub use bipartite::{
    bloch_vector, concurrence_from_reduced, expect_sigma_minus, ket0, ket1, partial_trace_particle,
    partial_trace_probe, qubit_density, reduced_qubit, schmidt_coefficients, sigma_minus, sigma_x,
    sigma_y, sigma_z, SchmidtPair, LOWER, UPPER,
};
pub use matrix::{kron, ComplexMatrix};
pub use vector::ComplexVector;
