//! Seeded single-photon detection statistics.
//!
//! Shots are split into fixed-size shards. Shard `s` draws from the ChaCha8
//! stream `s` of the generator seeded with `seed`, and shard counts are
//! reduced in shard order, so the result depends only on `(seed, shots)` and
//! never on how many worker threads ran the shards.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::perturbation::{perturbed_probabilities, PerturbationParams};
use crate::error::{Error, Result};

/// Shots per shard.
pub const SHARD_SHOTS: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectionStats {
    /// Clicks at the D detector.
    pub dd: u64,
    /// Clicks at the A detector.
    pub da: u64,
    pub shots: u64,
    pub seed: u64,
    /// `(dd - da) / (dd + da)`; `None` when nothing was detected.
    pub ratio: Option<f64>,
    pub stderr: Option<f64>,
    /// `(sqrt(dd) - sqrt(da)) / (sqrt(dd) + sqrt(da))`, an estimate of the
    /// detector-amplitude ratio (valid while both amplitudes share a sign).
    pub amplitude_ratio: Option<f64>,
    pub amplitude_stderr: Option<f64>,
}

impl DetectionStats {
    pub fn from_counts(dd: u64, da: u64, shots: u64, seed: u64) -> Self {
        let detected = dd + da;
        let (mut ratio, mut stderr, mut amplitude_ratio, mut amplitude_stderr) =
            (None, None, None, None);
        if detected > 0 {
            let n = detected as f64;
            let p = dd as f64 / n;
            let r = 2.0 * p - 1.0;
            ratio = Some(r);
            // binomial in dd given the detected total
            stderr = Some(((1.0 - r * r) / n).sqrt());

            let (u, v) = (p.sqrt(), (1.0 - p).sqrt());
            amplitude_ratio = Some((u - v) / (u + v));
            // delta method: d/dp of (u - v)/(u + v) is 1 / (u v (u + v)^2)
            amplitude_stderr = Some(1.0 / (n.sqrt() * (u + v).powi(2)));
        }
        DetectionStats {
            dd,
            da,
            shots,
            seed,
            ratio,
            stderr,
            amplitude_ratio,
            amplitude_stderr,
        }
    }

    pub fn lost(&self) -> u64 {
        self.shots - self.dd - self.da
    }
}

fn shard_counts(p_d: f64, p_a: f64, shots: u64, seed: u64, shard: u64) -> (u64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    let threshold = p_d + p_a;
    let (mut dd, mut da) = (0u64, 0u64);
    for _ in 0..shots {
        let u: f64 = rng.gen();
        if u < p_d {
            dd += 1;
        } else if u < threshold {
            da += 1;
        }
    }
    (dd, da)
}

/// Samples `shots` photons landing at D with probability `p_d`, at A with
/// `p_a`, and lost otherwise.
pub fn sample_counts(p_d: f64, p_a: f64, shots: u64, seed: u64) -> (u64, u64) {
    let shards = shots.div_ceil(SHARD_SHOTS);
    let shard_len = |s: u64| SHARD_SHOTS.min(shots - s * SHARD_SHOTS);

    #[cfg(feature = "parallel")]
    let per_shard: Vec<(u64, u64)> = {
        use rayon::prelude::*;
        (0..shards)
            .into_par_iter()
            .map(|s| shard_counts(p_d, p_a, shard_len(s), seed, s))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_shard: Vec<(u64, u64)> = (0..shards)
        .map(|s| shard_counts(p_d, p_a, shard_len(s), seed, s))
        .collect();

    per_shard
        .into_iter()
        .fold((0, 0), |(a, b), (x, y)| (a + x, b + y))
}

/// Runs the tilted-input experiment photon by photon.
pub fn monte_carlo(p: &PerturbationParams, shots: u64, seed: u64) -> Result<DetectionStats> {
    if shots == 0 {
        return Err(Error::invalid("shots", "must be at least 1"));
    }
    let (p_d, p_a) = perturbed_probabilities(p)?;
    let (dd, da) = sample_counts(p_d, p_a, shots, seed);
    Ok(DetectionStats::from_counts(dd, da, shots, seed))
}
