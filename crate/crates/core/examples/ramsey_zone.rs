//! A coherent cavity field as a which-way probe for an atom crossing a
//! Ramsey zone.

use mz_duality::ramsey::{ramsey_report, relaxation_reset, RamseyConfig};

fn main() -> mz_duality::Result<()> {
    println!(
        "{:>6} {:>4} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "|α|²", "N", "t_i", "D", "P", "V", "C"
    );
    for a2 in [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 9.0] {
        let r = ramsey_report(&RamseyConfig::from_alpha2(a2, 1.0)?)?;
        println!(
            "{a2:6.2} {:4} {:9.6} {:9.6} {:9.6} {:9.6} {:9.6}",
            r.cutoff,
            r.t_i,
            r.distinguishability,
            r.probe_predictability,
            r.probe_visibility,
            r.concurrence
        );
    }
    let one = ramsey_report(&RamseyConfig::from_alpha2(1.0, 1.0)?)?;
    let relaxed = relaxation_reset(&one);
    println!(
        "after relaxation: P = {}, regime {}",
        relaxed.probe_predictability, relaxed.regime
    );
    Ok(())
}
