//! Which-way regimes of a balanced particle as the distinguishability grows.

use mz_duality::duality::balanced_report;
use mz_duality::RegimeThresholds;

fn main() -> mz_duality::Result<()> {
    let t = RegimeThresholds::compute();
    println!(
        "cuts: classical < {:.6} < bad < {:.6} < intermediate < {:.6} < good",
        t.classical_cut, t.bad_cut, t.good_cut
    );
    println!(
        "particle visibility drop across the classical region: {:.6}",
        t.delta_v()
    );
    println!("{:>5} {:>8} {:>8} {:>8}  regime", "D", "P", "V", "C");
    for k in 0..=20 {
        let d = k as f64 / 20.0;
        let r = balanced_report(d)?;
        println!(
            "{d:5.2} {:8.5} {:8.5} {:8.5}  {}",
            r.probe_predictability, r.probe_visibility, r.concurrence, r.regime
        );
    }
    Ok(())
}
