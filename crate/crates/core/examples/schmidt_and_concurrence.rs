//! Schmidt coefficients and concurrence of random particle-probe states.

use mz_duality::linalg::{concurrence_from_reduced, reduced_qubit, schmidt_coefficients};
use mz_duality::random::random_state;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> mz_duality::Result<()> {
    let mut rng = StdRng::seed_from_u64(7);
    for d in [1, 2, 4, 8] {
        let psi = random_state(&mut rng, 2 * d);
        let sp = schmidt_coefficients(&psi)?;
        let c = concurrence_from_reduced(&reduced_qubit(&psi)?)?;
        println!(
            "d = {d}  λ = ({:.6}, {:.6})  S² = {:.6}  C = {:.6}  S² + C² = {:.12}",
            sp.lambda1,
            sp.lambda2,
            sp.duality(),
            c,
            sp.duality() + c * c
        );
    }
    Ok(())
}
