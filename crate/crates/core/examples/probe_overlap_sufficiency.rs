//! A five-level probe and the two-level probe with the same overlap give the
//! same report.

use mz_duality::duality_report;
use mz_duality::random::{random_particle, random_probe};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> mz_duality::Result<()> {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..5 {
        let particle = random_particle(&mut rng);
        let model = random_probe(&mut rng, 5);
        let overlap = model.overlap();
        let a = duality_report(&particle, model)?;
        let b = duality_report(&particle, overlap)?;
        println!(
            "γ = {:.4}  P: {:.10} vs {:.10}  C: {:.10} vs {:.10}  {}",
            overlap.gamma(),
            a.probe_predictability,
            b.probe_predictability,
            a.concurrence,
            b.concurrence,
            a.regime
        );
    }
    Ok(())
}
