mod common;

use common::*;
use mz_duality::duality::*;
use mz_duality::interferometer::{
    build_initial, evolve_pre_detection, OverlapProbe, ParticleState,
};
use mz_duality::linalg::partial_trace_particle;
use mz_duality::random::{random_particle, random_probe};
use mz_duality::Error;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn probe_identity_on_p0_d_grid() {
    for i in 0..=20 {
        let p0 = i as f64 / 20.0;
        for j in 0..=50 {
            let d = j as f64 / 50.0;
            let r = balanced_report_with(p0, d).unwrap();
            let sum =
                r.probe_predictability.powi(2) + r.probe_visibility.powi(2) + r.concurrence.powi(2);
            assert!((sum - 1.0).abs() < 1e-10, "p0 = {p0}, d = {d}");
            assert!(r.identity_residual() < 1e-10);

            let (pp, pv) = (probe_predictability_formula(p0, d), probe_visibility(p0, d));
            let c = concurrence_formula((1.0 - p0 * p0).sqrt(), d);
            assert!((pp * pp + pv * pv + c * c - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn state_route_matches_formulas() {
    let mut r = rng(20);
    for _ in 0..200 {
        let d = r.random_range(2..=8usize);
        let p = random_particle(&mut r);
        let v = duality_report_verbose(&p, random_probe(&mut r, d)).unwrap();
        assert!(
            (v.state.predictability_particle - v.formula.predictability_particle).abs() < 1e-10
        );
        assert!((v.state.visibility_particle - v.formula.visibility_particle).abs() < 1e-9);
        assert!((v.state.concurrence - v.formula.concurrence).abs() < 1e-10);
        assert!((v.state.probe_predictability - v.formula.probe_predictability).abs() < 1e-10);
        assert!((v.state.probe_visibility - v.formula.probe_visibility).abs() < 1e-10);
    }
}

#[test]
fn single_probe_state_reveals_projector_asymmetry() {
    let p = ParticleState::new(0.6, 0.0, 0.8).unwrap();
    let probe = OverlapProbe::real(0.5).unwrap().to_probe_model();
    let rho = evolve_pre_detection(&build_initial(&p, &probe), &probe, 0.0).unwrap();
    let rho2 = partial_trace_particle(&rho, 2).unwrap();
    let err = probe_predictability_state(&rho2, &probe.m_plus(), &probe.m_minus()).unwrap_err();
    assert!(matches!(err, Error::ProjectorAsymmetry { .. }));

    let balanced = ParticleState::new(0.0, 0.6, 0.8).unwrap();
    let rho = evolve_pre_detection(&build_initial(&balanced, &probe), &probe, 0.0).unwrap();
    let rho2 = partial_trace_particle(&rho, 2).unwrap();
    let pp = probe_predictability_state(&rho2, &probe.m_plus(), &probe.m_minus()).unwrap();
    assert!((pp - probe_predictability_formula(0.0, 0.75f64.sqrt())).abs() < 1e-12);
}

#[test]
fn probe_visibility_never_exceeds_concurrence() {
    for i in 0..=100 {
        let p1 = i as f64 / 100.0;
        for j in 0..=400 {
            let d = j as f64 / 400.0;
            let c = concurrence_formula((1.0 - p1 * p1).sqrt(), d);
            assert!(probe_visibility(p1, d) <= c + 1e-12);
        }
    }
}

#[test]
fn probe_visibility_has_two_preimages() {
    // D√(1-D²) = v  ⇔  D² = (1 ± √(1-4v²))/2
    for k in 1..50 {
        let v = 0.5 * k as f64 / 50.0;
        let s = (1.0 - 4.0 * v * v).sqrt();
        let lo = ((1.0 - s) / 2.0).sqrt();
        let hi = ((1.0 + s) / 2.0).sqrt();
        assert!(lo < std::f64::consts::FRAC_1_SQRT_2 && hi > std::f64::consts::FRAC_1_SQRT_2);
        assert!((probe_visibility(0.0, lo) - v).abs() < 1e-12);
        assert!((probe_visibility(0.0, hi) - v).abs() < 1e-12);
    }
    assert!((probe_visibility(0.0, std::f64::consts::FRAC_1_SQRT_2) - 0.5).abs() < 1e-15);
}

#[test]
fn regimes_advance_monotonically_with_d() {
    let order = |r: Regime| match r {
        Regime::Classical => 0,
        Regime::Bad => 1,
        Regime::Intermediate => 2,
        Regime::Good => 3,
    };
    let mut last = 0;
    for j in 0..=500 {
        let d = j as f64 / 500.0;
        let rank = order(balanced_report(d).unwrap().regime);
        assert!(rank >= last, "D = {d}");
        last = rank;
    }
    assert_eq!(last, 3);
}

#[test]
fn thresholds_are_roots() {
    let t = RegimeThresholds::compute();
    assert!((t.bad_cut - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
    let b = t.bad_cut;
    assert!((probe_predictability_formula(0.0, b) - concurrence_formula(1.0, b)).abs() < 1e-12);
    assert!(classical_margin(t.classical_cut).abs() < 1e-11);
    assert!((0.4283..=0.4293).contains(&t.classical_cut));
    assert!((0.0960..=0.0970).contains(&t.delta_v()));
    let r = balanced_report(crossing_point()).unwrap();
    assert!((r.probe_predictability - r.concurrence).abs() < 1e-12);
}

#[test]
fn regime_labels_serialize_lowercase() {
    for (r, s) in [
        (Regime::Classical, "classical"),
        (Regime::Bad, "bad"),
        (Regime::Intermediate, "intermediate"),
        (Regime::Good, "good"),
    ] {
        assert_eq!(r.to_string(), s);
        assert_eq!(serde_json::to_string(&r).unwrap(), format!("\"{s}\""));
    }
}

proptest! {
    #[test]
    fn probe_duality_from_purity(seed in any::<u64>(), d in 2usize..=8) {
        let mut r = rng(seed);
        let p = random_particle(&mut r);
        let rep = duality_report(&p, random_probe(&mut r, d)).unwrap();
        prop_assert!((rep.duality_probe - rep.duality_particle).abs() < 1e-10);
        prop_assert!(rep.identity_residual() < 1e-10);
        prop_assert!(rep.probe_visibility <= 0.5 + 1e-12);
    }

    #[test]
    fn quality_and_distinguishability(re in -0.7f64..0.7, im in -0.7f64..0.7) {
        let g = c(re, im);
        let q = quality(g).unwrap();
        prop_assert!((q + g.norm_sqr() - 1.0).abs() < 1e-15);
        prop_assert!((distinguishability(g).unwrap().powi(2) - q).abs() < 1e-15);
    }
}
