//! Scans the detector intensity against the phase shift and compares the
//! fitted fringe visibility with `V₀√(1 - D²)`.

use mz_duality::interferometer::{build_initial, scan_fringes, OverlapProbe, ParticleState};
use num_complex::Complex64;

fn main() -> mz_duality::Result<()> {
    let particle = ParticleState::new(0.0, 0.6, 0.8)?;
    for g in [1.0, 0.8, 0.5, 0.2, 0.0] {
        let probe = OverlapProbe::new(Complex64::new(g, 0.0))?.to_probe_model();
        let scan = scan_fringes(&build_initial(&particle, &probe), &probe, 64)?;
        println!(
            "|γ| = {g:.1}  visibility = {:.6}  expected = {:.6}  phase = {:+.4}",
            scan.visibility,
            particle.a_priori_visibility() * g,
            scan.phase
        );
    }
    Ok(())
}
