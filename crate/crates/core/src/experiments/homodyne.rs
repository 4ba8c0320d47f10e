use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polarisation::{Component, Polarisation};
use crate::protocol::{run, ProtocolParams};
use crate::state::{make_initial, ModeIndex};

/// Detector probabilities of the reference-arm interferometer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HomodyneResult {
    /// Bright port: reached deterministically when the protocol adds no phase.
    pub p_d0: f64,
    pub p_d1: f64,
    /// Leaked out of the protocol arm.
    pub p_loss: f64,
}

/// H photon split 50/50 into a lossless reference arm and the protocol arm,
/// recombined after 2N cycles with zero path-length phase.
///
/// With `s` the protocol-arm amplitude on `(L, H)`:
/// `D0 = (1 + s)/2`, `D1 = (1 - s)/2`. The photon never carries V, so the
/// mirror setting cannot enter the computation.
pub fn homodyne_run(half_cycles: u32, mirror_present: bool) -> Result<HomodyneResult> {
    let params = ProtocolParams::new(half_cycles, mirror_present)?;
    let out = run(&make_initial(Polarisation::horizontal())?, &params);
    let s = out.amplitude(ModeIndex::Left, Component::H);
    let half = Complex64::new(0.5, 0.0);
    let d0 = half + s * half;
    let d1 = half - s * half;
    // Everything in the protocol arm that is not back on (L, H).
    let lost_in_arm = out.norm_sqr() - s.norm_sqr();
    Ok(HomodyneResult {
        p_d0: d0.norm_sqr(),
        p_d1: d1.norm_sqr(),
        p_loss: 0.5 * lost_in_arm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::survival_amplitude_closed_form;

    #[test]
    fn n_ten_dark_port() {
        let r = homodyne_run(10, true).unwrap();
        // ((1 - cos^20(pi/20)) / 2)^2
        assert!((r.p_d1 - 0.012_040_006_872_125_978).abs() < 1e-12);
        assert_eq!(r, homodyne_run(10, false).unwrap());
    }

    #[test]
    fn large_n_goes_to_d0() {
        let r = homodyne_run(20_000, true).unwrap();
        assert!(r.p_d1 < 1e-8);
        assert!(r.p_d0 > 0.999);
    }

    #[test]
    fn empty_protocol_arm() {
        let r = homodyne_run(1, true).unwrap();
        assert!((r.p_d0 - 0.25).abs() < 1e-15);
        assert!((r.p_d1 - 0.25).abs() < 1e-15);
        assert!((r.p_loss - 0.5).abs() < 1e-12);
    }

    #[test]
    fn probabilities_sum_to_one() {
        for n in 1..=60 {
            let r = homodyne_run(n, true).unwrap();
            assert!((r.p_d0 + r.p_d1 + r.p_loss - 1.0).abs() < 1e-12, "N = {n}");
            let s = survival_amplitude_closed_form(n);
            assert!((r.p_d0 - ((1.0 + s) / 2.0).powi(2)).abs() < 1e-12);
        }
    }
}
