//! Frozen 50-digit reference values (see tools/gen_oracles.py) checked for
//! containment against the interval implementations.

use elliptic::{
    agm, dk_chain, ellint, kappa_sq_monotone_check, q_monotone_check, wave_params, EllKind,
};
use ivalcore::Interval;

include!("oracle/data.rs");

/// Containment with slack for the reference being rounded to f64.
fn holds(iv: Interval, v: f64) -> bool {
    let slack = 4.0 * f64::EPSILON * (v.abs() + 1.0);
    iv.inf() - slack <= v && v <= iv.sup() + slack
}

#[test]
fn agm_matches_reference() {
    let sqrt2 = Interval::point(2.0).sqrt().unwrap();
    let m = agm(Interval::ONE, sqrt2).unwrap();
    assert!(holds(m, AGM_ONE_SQRT2), "{m} vs {AGM_ONE_SQRT2}");
}

#[test]
fn complete_integrals_match_reference() {
    for &(k, big_k, e) in ELLINT.iter() {
        let kp = Interval::point(k);
        assert!(holds(ellint(kp, EllKind::K).unwrap(), big_k), "K({k})");
        assert!(holds(ellint(kp, EllKind::E).unwrap(), e), "E({k})");
        assert!(
            holds(ellint(kp, EllKind::KMinusE).unwrap(), big_k - e),
            "K-E({k})"
        );
    }
}

#[test]
fn wave_params_fields_contain_reference() {
    for &(k, big_k, e, kc, q, kappa, omega, omega_prime, x_period) in WAVE_PARAMS.iter() {
        let p = wave_params(Interval::point(k)).unwrap();
        assert!(holds(p.ell_k, big_k), "K at k={k}");
        assert!(holds(p.ell_e, e), "E at k={k}");
        assert!(holds(p.ell_kc, kc), "Kc at k={k}");
        assert!(holds(p.q, q), "q at k={k}");
        assert!(holds(p.kappa, kappa), "kappa at k={k}");
        assert!(holds(p.omega, omega), "omega at k={k}");
        assert!(holds(p.omega_prime, omega_prime), "omega' at k={k}");
        assert!(holds(p.x_period, x_period), "X at k={k}");
    }
}

#[test]
fn derivative_chain_contains_central_differences() {
    // reference slopes are central differences at step 1e-10 in 50-digit
    // arithmetic; truncation error is far below the containment slack
    let q_range = (Interval::point(0.1), Interval::point(0.4));
    for &(k, q_k, kappa_k, omega_k, big_k_k, r_k) in DK_CENTRAL_DIFF.iter() {
        let d = dk_chain(Interval::point(k), q_range).unwrap();
        assert!(holds(d.q_k, q_k), "dq/dk at k={k}: {} vs {q_k}", d.q_k);
        assert!(holds(d.kappa_k, kappa_k), "dkappa/dk at k={k}");
        assert!(holds(d.omega_k, omega_k), "domega/dk at k={k}");
        assert!(holds(d.ell_k_k, big_k_k), "dK/dk at k={k}");
        assert!(holds(d.ell_kc_k, r_k), "dKc/dk at k={k}");
    }
}

#[test]
fn slope_certificates_agree_with_reference_slopes() {
    let cell = Interval::new(0.95, 0.95 + 1e-6);
    let s = kappa_sq_monotone_check(&[cell]).unwrap();
    assert!(s.sup() < 0.0, "certificate failed: {s}");
    // the cell slope enclosure covers k = 0.95, so it contains the
    // reference derivative of kappa^2 there
    assert!(holds(s, KAPPA_SQ_SLOPE_95), "{s} vs {KAPPA_SQ_SLOPE_95}");
    assert!(KAPPA_SQ_SLOPE_95 < 0.0);

    // a negative certificate value means the nome increases with k
    let t = q_monotone_check(&[Interval::point(0.95)]).unwrap();
    assert!(t.sup() < 0.0, "certificate failed: {t}");
    assert!(NOME_SLOPE_95 > 0.0);
}
