//! Full complementarity report for a random probe, measured on the evolved
//! state and compared with the closed forms.

use mz_duality::duality::duality_report_verbose;
use mz_duality::random::random_probe;
use mz_duality::ParticleState;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = StdRng::seed_from_u64(1);
    let particle = ParticleState::new(0.3, 0.0, (1.0f64 - 0.09).sqrt())?;
    let probe = random_probe(&mut rng, 4);
    let report = duality_report_verbose(&particle, probe)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    println!(
        "identity residual: {:.2e}",
        report.state.identity_residual()
    );
    Ok(())
}
