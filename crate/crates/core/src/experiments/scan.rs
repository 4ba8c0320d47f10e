//! Signal-to-noise scan over the input tilt.
//!
//! For each tilt both apparatus variants (mirror present and absent) are run
//! with independent seeded streams, and the z-score of the difference of
//! their amplitude-ratio estimates measures how distinguishable they are.

use serde::{Deserialize, Serialize};

use super::montecarlo::{monte_carlo, DetectionStats};
use super::perturbation::{
    amplitude_ratio_closed_form, perturbed_probabilities, MuPolicy, PerturbationParams,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub delta: f64,
    pub mu: f64,
    pub half_cycles: u32,
    /// Detection probabilities with the mirror present.
    pub p_d: f64,
    pub p_a: f64,
    /// Amplitude ratio `-sin(delta)/(mu c cos(delta))`, `None` where undefined.
    pub ratio_closed: Option<f64>,
    pub ratio_empirical: Option<f64>,
    pub stderr: Option<f64>,
    /// Mirror present vs absent, from the sampled counts.
    pub z: Option<f64>,
    /// The same z-score evaluated on expected counts.
    pub expected_z: Option<f64>,
    pub present: DetectionStats,
    pub absent: DetectionStats,
}

/// SplitMix64 finaliser, used to derive one independent seed per run.
fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

pub fn run_seed(seed: u64, row: usize, mirror_present: bool) -> u64 {
    mix(seed ^ mix(2 * row as u64 + u64::from(!mirror_present)))
}

/// Limit of the amplitude-ratio estimator and its standard error for
/// `detected` expected detections.
fn estimator_limit(p_d: f64, p_a: f64, detected: f64) -> Option<(f64, f64)> {
    let total = p_d + p_a;
    if total <= 0.0 || detected <= 0.0 {
        return None;
    }
    let (u, v) = ((p_d / total).sqrt(), (p_a / total).sqrt());
    Some(((u - v) / (u + v), 1.0 / (detected.sqrt() * (u + v).powi(2))))
}

/// z-score expected from the closed-form probabilities at `shots` photons per variant.
pub fn expected_z(delta: f64, mu: f64, half_cycles: u32, shots: u64) -> Result<Option<f64>> {
    let present = PerturbationParams::new(delta, mu, half_cycles)?;
    let absent = present.with_mirror(false);
    let (pd, pa) = perturbed_probabilities(&present)?;
    let (qd, qa) = perturbed_probabilities(&absent)?;
    let n = shots as f64;
    Ok(
        match (
            estimator_limit(pd, pa, n * (pd + pa)),
            estimator_limit(qd, qa, n * (qd + qa)),
        ) {
            (Some((r1, s1)), Some((r2, s2))) => Some((r1 - r2).abs() / s1.hypot(s2)),
            _ => None,
        },
    )
}

fn z_score(a: &DetectionStats, b: &DetectionStats) -> Option<f64> {
    let (r1, s1) = (a.amplitude_ratio?, a.amplitude_stderr?);
    let (r2, s2) = (b.amplitude_ratio?, b.amplitude_stderr?);
    let se = s1.hypot(s2);
    (se > 0.0).then(|| (r1 - r2).abs() / se)
}

pub fn snr_scan(
    deltas: &[f64],
    policy: MuPolicy,
    half_cycles: u32,
    shots: u64,
    seed: u64,
) -> Result<Vec<ScanRow>> {
    if deltas.is_empty() {
        return Err(Error::invalid("deltas", "scan grid is empty"));
    }
    deltas
        .iter()
        .enumerate()
        .map(|(i, &delta)| {
            let mu = policy.mu(delta, half_cycles)?;
            let p = PerturbationParams::new(delta, mu, half_cycles)?;
            let (p_d, p_a) = perturbed_probabilities(&p)?;
            let present = monte_carlo(&p, shots, run_seed(seed, i, true))?;
            let absent = monte_carlo(&p.with_mirror(false), shots, run_seed(seed, i, false))?;
            Ok(ScanRow {
                delta,
                mu,
                half_cycles,
                p_d,
                p_a,
                ratio_closed: amplitude_ratio_closed_form(&p).ok(),
                ratio_empirical: present.amplitude_ratio,
                stderr: present.amplitude_stderr,
                z: z_score(&present, &absent),
                expected_z: expected_z(delta, mu, half_cycles, shots)?,
                present,
                absent,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn empty_grid_is_rejected() {
        assert!(snr_scan(&[], MuPolicy::Fixed(1.0), 10, 10, 0).is_err());
    }

    #[test]
    fn zero_tilt_is_indistinguishable() {
        for shots in [1_000u64, 100_000, 1_000_000] {
            let rows = snr_scan(&[0.0], MuPolicy::Fixed(1.0), 10, shots, 11).unwrap();
            assert!(rows[0].z.unwrap() < 3.0, "shots = {shots}: {:?}", rows[0].z);
            assert_eq!(rows[0].expected_z, Some(0.0));
        }
    }

    #[test]
    fn large_tilt_is_distinguishable() {
        let rows = snr_scan(&[PI / 8.0], MuPolicy::Fixed(1.0), 10, 1_000_000, 11).unwrap();
        assert!(rows[0].z.unwrap() > 10.0);
    }

    #[test]
    fn expected_z_grows_with_tilt() {
        let mut last = -1.0;
        for k in 0..=64 {
            let delta = k as f64 * (PI / 8.0) / 64.0;
            let z = expected_z(delta, 1.0, 10, 1_000_000).unwrap().unwrap();
            assert!(z >= last, "delta = {delta}");
            last = z;
        }
    }

    #[test]
    fn tuned_policy_rows() {
        let rows = snr_scan(&[0.0, 0.05, 0.1], MuPolicy::WeakValueTuned, 10, 20_000, 3).unwrap();
        // mu = 0 at delta = 0: nothing to compare against
        assert_eq!(rows[0].ratio_closed, None);
        for row in &rows[1..] {
            assert!((row.ratio_closed.unwrap() + 1.0).abs() < 1e-12);
            assert_eq!(row.ratio_empirical, Some(-1.0));
        }
    }

    #[test]
    fn run_seeds_differ() {
        assert_ne!(run_seed(1, 0, true), run_seed(1, 0, false));
        assert_ne!(run_seed(1, 0, true), run_seed(1, 1, true));
        assert_eq!(run_seed(5, 3, false), run_seed(5, 3, false));
    }
}
