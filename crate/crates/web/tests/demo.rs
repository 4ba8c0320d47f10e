use cheshire_core::survival_amplitude_closed_form;
use cheshire_web::{pointer_profile_data, snr_scan_data, weak_value_curve_data};

#[test]
fn weak_value_curve_tracks_analytic_form() {
    let curve = weak_value_curve_data(10, true, 1.3, 27).unwrap();
    let c = survival_amplitude_closed_form(10);
    assert_eq!(curve.betas().len(), 27);
    assert_eq!(curve.betas()[0], 0.0);
    assert!((curve.betas()[26] - 1.3).abs() < 1e-15);
    for ((s, a), beta) in curve
        .simulated()
        .iter()
        .zip(curve.analytic())
        .zip(curve.betas())
    {
        assert!((s - a).abs() < 1e-10, "beta = {beta}");
    }
    assert!(curve.simulated()[0].abs() < 1e-12);
    let diagonal = weak_value_curve_data(10, true, std::f64::consts::FRAC_PI_4, 2).unwrap();
    assert!((diagonal.simulated()[1] + 1.0 / c).abs() < 1e-10);
    assert!((diagonal.large_n()[1] + 1.0).abs() < 1e-12);
}

#[test]
fn weak_value_curve_rejects_the_pole() {
    assert!(weak_value_curve_data(10, true, std::f64::consts::FRAC_PI_2, 5).is_err());
    assert!(weak_value_curve_data(10, true, 1.0, 1).is_err());
}

#[test]
fn pointer_centroid_flips_sign() {
    let a = 0.02;
    let view = pointer_profile_data(10, true, a, 1.0, 0.0, false, 2001).unwrap();
    let c = survival_amplitude_closed_form(10);
    assert_eq!(view.ys().len(), 2001);
    assert_eq!(view.intensity().len(), 2001);
    assert!((view.reference_centroid() - a / 2.0).abs() < 1e-9);
    assert!((view.centroid() + a / (2.0 * c)).abs() < 1e-4 * a);
    assert!(view.first_moment() < 0.0);
    assert!(view.probability() > 0.0 && view.probability() < 1.0);
}

#[test]
fn h_polariser_removes_the_shift() {
    let view = pointer_profile_data(10, true, 0.02, 1.0, 0.0, true, 1001).unwrap();
    assert!(view.centroid().abs() < 1e-12);
    assert!(view.first_moment().is_nan());
}

#[test]
fn pointer_rejects_bad_input() {
    assert!(pointer_profile_data(10, true, 0.02, -1.0, 0.0, false, 1001).is_err());
    assert!(pointer_profile_data(10, true, 0.02, 1.0, 0.0, false, 2).is_err());
}

#[test]
fn scan_is_seeded_and_close_to_closed_form() {
    let a = snr_scan_data(10, 1.0, 0.3, 4, 20_000, 11).unwrap();
    let b = snr_scan_data(10, 1.0, 0.3, 4, 20_000, 11).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.deltas().len(), 4);
    for i in 1..4 {
        let diff = (a.ratio_empirical()[i] - a.ratio_closed()[i]).abs();
        assert!(diff < 6.0 * a.stderr()[i], "row {i}: {diff}");
    }
    assert!(snr_scan_data(10, 1.0, 0.3, 1, 100, 0).is_err());
}
