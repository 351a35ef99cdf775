mod common;

use std::f64::consts::FRAC_PI_4;

use common::*;
use mz_duality::duality::Regime;
use mz_duality::ramsey::*;
use mz_duality::Error;

/// Poisson weight `e^{-a} aⁿ / n!` through logarithms.
fn poisson(a: f64, n: usize) -> f64 {
    let ln_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
    let ln_a = if a == 0.0 {
        if n == 0 {
            0.0
        } else {
            f64::NEG_INFINITY
        }
    } else {
        n as f64 * a.ln()
    };
    (ln_a - a - ln_fact).exp()
}

fn poisson_tail(a: f64, cutoff: usize) -> f64 {
    1.0 - (0..=cutoff).map(|n| poisson(a, n)).sum::<f64>()
}

fn report(alpha2: f64) -> RamseyResult {
    ramsey_report(&RamseyConfig::from_alpha2(alpha2, 1.0).unwrap()).unwrap()
}

#[test]
fn fock_populations_match_poisson() {
    for a in [0.25f64, 1.0, 4.0, 25.0] {
        let f = CoherentField::with_cutoff(c(a.sqrt(), 0.0), 80).unwrap();
        for (n, p) in f.populations().iter().enumerate() {
            assert!((p - poisson(a, n)).abs() < 1e-13, "a = {a}, n = {n}");
        }
        assert!((f.mean_photon_number() - a).abs() < 1e-10);
    }
}

#[test]
fn cutoff_is_minimal_for_tail_bound() {
    for a in [0.1f64, 1.0, 2.0, 9.0, 50.0] {
        let f = coherent_field(c(a.sqrt(), 0.0), FOCK_TAIL).unwrap();
        assert!(poisson_tail(a, f.cutoff) <= FOCK_TAIL * 1.01);
        assert!(poisson_tail(a, f.cutoff - 1) > FOCK_TAIL * 0.99, "a = {a}");
        assert!((f.tail() - poisson_tail(a, f.cutoff)).abs() < 1e-13);
    }
}

#[test]
fn config_cutoff_respects_floor() {
    let cfg = RamseyConfig::from_alpha2(1.0, 1.0).unwrap();
    assert_eq!(cfg.cutoff(), 20);
    assert!(matches!(
        RamseyConfig::with_cutoff(c(1.0, 0.0), 1.0, 19),
        Err(Error::OutOfRange(_))
    ));
    assert!(matches!(
        RamseyConfig::from_alpha2(100.5, 1.0),
        Err(Error::AlphaTooLarge(_))
    ));
    assert!(RamseyConfig::from_alpha2(100.0, 1.0).is_ok());
}

#[test]
fn pulse_splits_populations_evenly() {
    for a in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let cfg = RamseyConfig::from_alpha2(a, 1.0).unwrap();
        let t = pulse_time(&cfg).unwrap();
        assert!((cfg.excited_population(t) - 0.5).abs() < 1e-12);
        assert!((cfg.ground_population(t) - 0.5).abs() < 1e-11);
        assert!(t > 0.0 && t < FRAC_PI_4 + 1e-12);
    }
}

#[test]
fn vacuum_pulse_is_quarter_period() {
    for rabi in [0.5, 1.0, 3.0] {
        let cfg = RamseyConfig::from_alpha2(0.0, rabi).unwrap();
        let t = pulse_time(&cfg).unwrap();
        assert!((t - FRAC_PI_4 / rabi).abs() < 1e-12);
        let r = ramsey_report(&cfg).unwrap();
        assert!((r.distinguishability - 1.0).abs() < 1e-12);
        assert!(r.overlap.norm() < 1e-12);
    }
}

#[test]
fn one_photon_field_numbers() {
    let r = report(1.0);
    assert!((r.distinguishability - 0.8203).abs() < 5e-4);
    assert!((r.concurrence - 0.8203).abs() < 5e-4);
    assert!((r.probe_predictability - 0.3271).abs() < 5e-4);
    assert!((r.probe_visibility - 0.4691).abs() < 5e-4);
    assert!(r.identity_residual() < 1e-10);
}

#[test]
fn overlap_and_distinguishability_are_complementary() {
    for a in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let r = report(a);
        assert!((r.distinguishability.powi(2) + r.overlap.norm_sqr() - 1.0).abs() < 1e-10);
        assert!((r.concurrence - r.distinguishability).abs() < 1e-10);
        assert!(r.identity_residual() < 1e-10);
    }
}

#[test]
fn doubling_cutoff_leaves_results_unchanged() {
    let base = RamseyConfig::from_alpha2(1.0, 1.0).unwrap();
    let wide = RamseyConfig::with_cutoff(base.alpha(), 1.0, 2 * base.cutoff()).unwrap();
    let (a, b) = (ramsey_report(&base).unwrap(), ramsey_report(&wide).unwrap());
    for (x, y) in [
        (a.t_i, b.t_i),
        (a.overlap.re, b.overlap.re),
        (a.distinguishability, b.distinguishability),
        (a.probe_predictability, b.probe_predictability),
        (a.probe_visibility, b.probe_visibility),
        (a.concurrence, b.concurrence),
    ] {
        assert!((x - y).abs() < 1e-9);
    }
}

#[test]
fn weak_fields_approach_vacuum() {
    let mut last_gap = f64::INFINITY;
    for a in [0.1, 0.01, 0.001] {
        let r = report(a);
        let gap = (1.0 - r.distinguishability).max((r.t_i - FRAC_PI_4).abs());
        assert!(gap < last_gap);
        last_gap = gap;
    }
    assert!(last_gap < 1e-3);
}

#[test]
fn global_state_is_normalized() {
    let cfg = RamseyConfig::from_alpha2(2.0, 1.0).unwrap();
    let t = pulse_time(&cfg).unwrap();
    let (plus, minus) = post_interaction_states(&cfg, t).unwrap();
    assert_eq!(plus.dim(), cfg.cutoff() + 2);
    let phi = global_state(&plus, &minus).unwrap();
    assert!((phi.psi().norm() - 1.0).abs() < 1e-12);
    assert!(matches!(
        post_interaction_states(&cfg, 0.5 * t),
        Err(Error::NormalizationBroken(_))
    ));
}

#[test]
fn relaxed_field_is_classical() {
    let rep = relaxation_reset(&report(1.0));
    assert_eq!(rep.regime, Regime::Classical);
    assert!((rep.probe_predictability - 1.0).abs() < 1e-12);
    assert!(rep.concurrence.abs() < 1e-12);
}
