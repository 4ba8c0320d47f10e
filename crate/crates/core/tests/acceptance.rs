//! Exit criteria. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any fails.

// `!(x < tol)` so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cheshire_core::experiments::perturbation::{amplitude_ratio, amplitude_ratio_closed_form};
use cheshire_core::experiments::{homodyne_run, snr_scan, MuPolicy, PerturbationParams};
use cheshire_core::pointer::{
    h_polariser_variant, measure, prepare_pointer, projector_r_amplitudes, projector_r_weak_direct,
    projector_r_weak_exact, projector_r_weak_profile, reference_profile, GaussianPointer,
};
use cheshire_core::weak::{sigma_x_weak_analytic, sigma_x_weak_simulated};
use cheshire_core::{
    evolve, make_initial, survival_amplitude_closed_form, Component, ModeIndex, Polarisation,
    ProtocolParams,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within_time(start: Instant, limit: Duration, summary: String) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "{summary}; took {took:.2?}, limit {limit:?}");
    Ok(format!("{summary}; {took:.2?}"))
}

fn v_branch_flip() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in [1u32, 5, 10, 50] {
        let params = ProtocolParams::new(n, true).map_err(|e| e.to_string())?;
        let input = make_initial(Polarisation::vertical()).map_err(|e| e.to_string())?;
        let out = evolve(&input, &params, params.cycle_len());
        let amp = out.amplitude(ModeIndex::Left, Component::V);
        let err = (amp - Complex64::new(-1.0, 0.0)).norm();
        worst = worst.max(err);
        ensure!(err < 1e-12, "N = {n}: (L,V) amplitude {amp}");
    }
    within_time(
        start,
        Duration::from_secs(1),
        format!("max |amp + 1| = {worst:.2e}"),
    )
}

fn h_branch_survival() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1u32..=50 {
        let params = ProtocolParams::new(n, true).map_err(|e| e.to_string())?;
        let input = make_initial(Polarisation::horizontal()).map_err(|e| e.to_string())?;
        let out = evolve(&input, &params, params.cycle_len());
        let err = (out.amplitude(ModeIndex::Left, Component::H)
            - Complex64::new(survival_amplitude_closed_form(n), 0.0))
        .norm();
        worst = worst.max(err);
        ensure!(err < 1e-10, "N = {n}: survival error {err:e}");
    }
    let leak = |n: u32| -> Result<f64, String> {
        let params = ProtocolParams::new(n, true).map_err(|e| e.to_string())?;
        let input = make_initial(Polarisation::horizontal()).map_err(|e| e.to_string())?;
        Ok(evolve(&input, &params, params.cycle_len()).leak_probability())
    };
    let mut ratios = Vec::new();
    for n in [100u32, 200, 400, 800] {
        let r = leak(n)? / leak(2 * n)?;
        ensure!((r - 2.0).abs() < 0.2, "leak(N)/leak(2N) = {r} at N = {n}");
        ratios.push(format!("{r:.4}"));
    }
    within_time(
        start,
        Duration::from_secs(5),
        format!(
            "max survival error {worst:.2e}, leak ratios [{}]",
            ratios.join(", ")
        ),
    )
}

fn sigma_x_flip() -> Outcome {
    let n = 10;
    let params = ProtocolParams::new(n, true).map_err(|e| e.to_string())?;
    let input = make_initial(Polarisation::diagonal()).map_err(|e| e.to_string())?;
    let out = evolve(&input, &params, params.cycle_len()).left();
    let c = survival_amplitude_closed_form(n);
    let expected = Polarisation::real(c * FRAC_1_SQRT_2, -FRAC_1_SQRT_2);
    let err = (out.h - expected.h).norm().max((out.v - expected.v).norm());
    ensure!(err < 1e-10, "L-mode output {out:?}, expected {expected:?}");
    // D/A content: A carries (1 + c)/2, D only (c - 1)/2
    let [d, a] = out.amplitudes(cheshire_core::Basis::Diagonal);
    ensure!(
        (a.re - (1.0 + c) / 2.0).abs() < 1e-10 && (d.re - (c - 1.0) / 2.0).abs() < 1e-10,
        "D/A = {d}, {a}"
    );
    Ok(format!("D -> (c H - V)/sqrt2, error {err:.2e}"))
}

fn weak_value_table() -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..6 {
        let beta = k as f64 * PI / 12.0;
        for mirror in [true, false] {
            let sim = sigma_x_weak_simulated(beta, 10, mirror).map_err(|e| e.to_string())?;
            let exact = sigma_x_weak_analytic(beta, 10, mirror).map_err(|e| e.to_string())?;
            let err = (sim - Complex64::new(exact, 0.0)).norm();
            worst = worst.max(err);
            ensure!(
                err < 1e-9,
                "beta = {beta}, mirror = {mirror}: {sim} vs {exact}"
            );
        }
    }
    let present = sigma_x_weak_simulated(PI / 4.0, 200, true).map_err(|e| e.to_string())?;
    let absent = sigma_x_weak_simulated(PI / 4.0, 200, false).map_err(|e| e.to_string())?;
    ensure!(
        (absent - 1.0).norm() < 1e-9,
        "beta = pi/4, N = 200, no mirror: {absent}"
    );
    ensure!(
        (present + 1.0).norm() < 1e-2,
        "table max error {worst:.2e}; beta = pi/4, N = 200, mirror: {:.6} (|err| = {:.4} >= 1e-2)",
        present.re,
        (present + 1.0).norm()
    );
    Ok(format!(
        "table max error {worst:.2e}; N = 200: {:.6} / {:.6}",
        present.re, absent.re
    ))
}

fn homodyne_no_go() -> Outcome {
    for n in 1u32..=50 {
        let a = homodyne_run(n, true).map_err(|e| e.to_string())?;
        let b = homodyne_run(n, false).map_err(|e| e.to_string())?;
        let bits = |r: &cheshire_core::experiments::HomodyneResult| {
            [r.p_d0.to_bits(), r.p_d1.to_bits(), r.p_loss.to_bits()]
        };
        ensure!(bits(&a) == bits(&b), "N = {n}: {a:?} vs {b:?}");
    }
    Ok("bit-identical for N = 1..50".into())
}

fn perturbation_ratio() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let delta = rng.gen_range(0.0..0.78);
        let mu = rng.gen_range(0.1..=1.0);
        let n = rng.gen_range(2u32..=50);
        let p = PerturbationParams::new(delta, mu, n).map_err(|e| e.to_string())?;
        let sim = amplitude_ratio(&p).map_err(|e| e.to_string())?;
        let c = survival_amplitude_closed_form(n);
        let expected = -delta.sin() / (mu * c * delta.cos());
        let err = (sim - expected).abs();
        worst = worst.max(err);
        ensure!(
            err < 1e-12,
            "delta = {delta}, mu = {mu}, N = {n}: {sim} vs {expected}"
        );
    }
    for delta in [0.01, 0.1, PI / 8.0] {
        let mu = MuPolicy::WeakValueTuned
            .mu(delta, 10)
            .map_err(|e| e.to_string())?;
        let p = PerturbationParams::new(delta, mu, 10).map_err(|e| e.to_string())?;
        let r = amplitude_ratio(&p).map_err(|e| e.to_string())?;
        ensure!(
            (r + 1.0).abs() <= 4.0 * f64::EPSILON,
            "tuned delta = {delta}: {r}"
        );
        let closed = amplitude_ratio_closed_form(&p).map_err(|e| e.to_string())?;
        ensure!(
            (closed + 1.0).abs() <= 4.0 * f64::EPSILON,
            "tuned closed form {closed}"
        );
    }
    Ok(format!(
        "100 draws, max error {worst:.2e}; tuned mu gives -1"
    ))
}

fn snr_collapse() -> Outcome {
    let start = Instant::now();
    let rows = snr_scan(&[0.0, PI / 8.0], MuPolicy::Fixed(1.0), 10, 1_000_000, 2024)
        .map_err(|e| e.to_string())?;
    let z0 = rows[0].z.ok_or("no z at delta = 0")?;
    let z8 = rows[1].z.ok_or("no z at delta = pi/8")?;
    ensure!(z8 > 10.0, "z(pi/8) = {z8}");
    ensure!(z0 < 3.0, "z(0) = {z0}");
    within_time(
        start,
        Duration::from_secs(30),
        format!("z(0) = {z0:.3}, z(pi/8) = {z8:.1}"),
    )
}

fn pointer_centroids() -> Outcome {
    let (w0, a, n) = (1.0, 0.01, 200_000);
    let gp = GaussianPointer::horizontal(w0, a, 0.0).map_err(|e| e.to_string())?;
    let field = prepare_pointer(&gp).map_err(|e| e.to_string())?;
    let y_w = reference_profile(&field)
        .centroid()
        .map_err(|e| e.to_string())?;
    ensure!((y_w - a / 2.0).abs() < 1e-8, "<y_w> = {y_w}");
    let mut worst = 0.0f64;
    for k in 0..=8 {
        let beta = k as f64 * PI / 16.0;
        let (_, s) = measure(&gp.with_beta(beta), n, true).map_err(|e| e.to_string())?;
        let law = a / 2.0 * (beta.sin().powi(2) - beta.cos().powi(2));
        let err = (s.first_moment - law).abs();
        worst = worst.max(err);
        ensure!(
            err < 1e-6,
            "beta = {beta}: <y_f> = {} vs {law}",
            s.first_moment
        );
    }
    let (_, present) = measure(&gp, n, true).map_err(|e| e.to_string())?;
    let (_, absent) = measure(&gp, n, false).map_err(|e| e.to_string())?;
    ensure!(
        (present.centroid + a / 2.0).abs() < 1e-6,
        "mirror centroid {}",
        present.centroid
    );
    ensure!(
        (absent.centroid - a / 2.0).abs() < 1e-6,
        "no-mirror centroid {}",
        absent.centroid
    );
    Ok(format!(
        "<y_w> - a/2 = {:.1e}; law max error {worst:.1e}; weak values {:.6} / {:.6}",
        y_w - a / 2.0,
        present.weak_value,
        absent.weak_value
    ))
}

fn projector_weak_value() -> Outcome {
    let (w0, a) = (1.0, 0.01);
    let gp = GaussianPointer::horizontal(w0, a, 0.0).map_err(|e| e.to_string())?;
    for n in 0..=20 {
        let closed = projector_r_weak_profile(n, 10, 0.0, &gp).map_err(|e| e.to_string())?;
        let direct = projector_r_weak_direct(n, 10, 0.0, &gp).map_err(|e| e.to_string())?;
        ensure!(
            closed == 0.0 && direct.norm() < 1e-9,
            "y = 0, n = {n}: {closed}, {direct}"
        );
    }
    let peak_expected = (1.0 - (-a * a / (w0 * w0)).exp()) / 2.0;
    let peak = projector_r_weak_profile(10, 10, -a / 2.0, &gp).map_err(|e| e.to_string())?;
    ensure!(
        (peak - peak_expected).abs() < 1e-9,
        "peak {peak} vs {peak_expected}"
    );

    // closed form with the attenuation kept, against direct evaluation across n
    let mut worst = 0.0f64;
    for n in 0..=20 {
        let amps = projector_r_amplitudes(n, 10).map_err(|e| e.to_string())?;
        for y in [-3.0, -a / 2.0, 0.5, 2.0] {
            let direct = amps.at(y, &gp).map_err(|e| e.to_string())?;
            let exact = projector_r_weak_exact(n, 10, y, &gp).map_err(|e| e.to_string())?;
            worst = worst.max((direct - exact).norm());
        }
    }
    ensure!(worst < 1e-9, "finite-N closed form vs direct: {worst:e}");

    let big = 500_000u32;
    let closed =
        projector_r_weak_profile(big as usize, big, -a / 2.0, &gp).map_err(|e| e.to_string())?;
    let direct =
        projector_r_weak_direct(big as usize, big, -a / 2.0, &gp).map_err(|e| e.to_string())?;
    let err = (direct - closed).norm();
    ensure!(
        err < 1e-9,
        "N = {big}: closed form {closed} vs direct {direct}"
    );
    Ok(format!(
        "peak {peak:.6e}; N=10 max error {worst:.1e}; N={big} error {err:.1e}"
    ))
}

fn h_polariser_no_go() -> Outcome {
    let gp = GaussianPointer::horizontal(1.0, 0.01, 0.0).map_err(|e| e.to_string())?;
    let present = h_polariser_variant(&gp, 10, true).map_err(|e| e.to_string())?;
    let absent = h_polariser_variant(&gp, 10, false).map_err(|e| e.to_string())?;
    let diff = present
        .profile
        .intensity()
        .iter()
        .zip(absent.profile.intensity())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    ensure!(diff < 1e-10, "profiles differ by {diff:e}");
    ensure!(
        present.centroid.abs() < 1e-8,
        "mirror centroid {}",
        present.centroid
    );
    ensure!(
        absent.centroid.abs() < 1e-8,
        "no-mirror centroid {}",
        absent.centroid
    );
    Ok(format!(
        "max profile difference {diff:.1e}; centroids {:.1e} / {:.1e}",
        present.centroid, absent.centroid
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("V-branch flip", v_branch_flip),
        ("H-branch survival", h_branch_survival),
        ("sigma_x flip", sigma_x_flip),
        ("weak value table", weak_value_table),
        ("homodyne no-go", homodyne_no_go),
        ("perturbation ratio", perturbation_ratio),
        ("SNR collapse", snr_collapse),
        ("pointer centroids", pointer_centroids),
        ("projector weak value", projector_weak_value),
        ("H-polariser no-go", h_polariser_no_go),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        writeln!(out, "criterion {:>2} {tag}  {name}: {detail}", i + 1).unwrap();
    }
    writeln!(
        out,
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    )
    .unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
