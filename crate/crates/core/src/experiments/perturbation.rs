//! Tilted-input polarimetry.
//!
//! The input is tilted from H towards V by `delta`, run through the protocol,
//! the H arm is attenuated by `mu`, and the beam is analysed in the D/A basis.
//! With the mirror the detector amplitudes are
//!
//! ```text
//! <D|out> = (mu c cos(delta) - sin(delta)) / sqrt(2)
//! <A|out> = (mu c cos(delta) + sin(delta)) / sqrt(2)
//! ```
//!
//! whose normalised difference is `-sin(delta) / (mu c cos(delta))`, the
//! sigma_x weak value. Photon counters measure the squared moduli; both
//! levels are exposed here.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarisation::Polarisation;
use crate::protocol::{evolve, survival_amplitude_closed_form, ProtocolParams};
use crate::state::make_initial;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbationParams {
    pub delta: f64,
    pub mu: f64,
    pub half_cycles: u32,
    pub mirror_present: bool,
}

impl PerturbationParams {
    /// Mirror present by default.
    pub fn new(delta: f64, mu: f64, half_cycles: u32) -> Result<Self> {
        if !(0.0..FRAC_PI_2).contains(&delta) {
            return Err(Error::invalid("delta", "must lie in [0, pi/2)"));
        }
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::invalid("mu", "must lie in [0, 1]"));
        }
        if half_cycles == 0 {
            return Err(Error::invalid("N", "must be a positive integer"));
        }
        Ok(PerturbationParams {
            delta,
            mu,
            half_cycles,
            mirror_present: true,
        })
    }

    pub fn with_mirror(mut self, mirror_present: bool) -> Self {
        self.mirror_present = mirror_present;
        self
    }

    fn protocol(&self) -> Result<ProtocolParams> {
        ProtocolParams::new(self.half_cycles, self.mirror_present)
    }
}

/// How the attenuation is chosen for each tilt in a scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MuPolicy {
    Fixed(f64),
    /// `mu = tan(delta)`. For finite N this yields `-1/c`, not `-1`.
    TanDelta,
    /// `mu c = tan(delta)`, which makes the amplitude ratio exactly -1.
    WeakValueTuned,
}

impl MuPolicy {
    pub fn mu(&self, delta: f64, half_cycles: u32) -> Result<f64> {
        let mu = match *self {
            MuPolicy::Fixed(mu) => mu,
            MuPolicy::TanDelta => delta.tan(),
            MuPolicy::WeakValueTuned => delta.tan() / survival_amplitude_closed_form(half_cycles),
        };
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::invalid(
                "mu",
                format!("policy {self:?} gives mu = {mu} outside [0, 1] at delta = {delta}"),
            ));
        }
        Ok(mu)
    }

    pub fn name(&self) -> &'static str {
        match self {
            MuPolicy::Fixed(_) => "fixed",
            MuPolicy::TanDelta => "tan-delta",
            MuPolicy::WeakValueTuned => "tuned",
        }
    }
}

/// Amplitudes arriving at the D and A detectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectionAmplitudes {
    pub d: Complex64,
    pub a: Complex64,
}

impl DetectionAmplitudes {
    pub fn probabilities(&self) -> (f64, f64) {
        (self.d.norm_sqr(), self.a.norm_sqr())
    }
}

/// Simulates the tilted photon through the protocol and the analysis arm.
pub fn detection_amplitudes(p: &PerturbationParams) -> Result<DetectionAmplitudes> {
    let params = p.protocol()?;
    let input = make_initial(Polarisation::tilted(p.delta))?;
    let out = evolve(&input, &params, params.cycle_len()).left();
    let h = out.h * p.mu;
    let v = out.v;
    Ok(DetectionAmplitudes {
        d: (h + v) * FRAC_1_SQRT_2,
        a: (h - v) * FRAC_1_SQRT_2,
    })
}

/// `(P_D, P_A)` as detection probabilities `|<D|out>|^2`, `|<A|out>|^2`.
pub fn perturbed_probabilities(p: &PerturbationParams) -> Result<(f64, f64)> {
    Ok(detection_amplitudes(p)?.probabilities())
}

/// `(x - y) / (x + y)`.
pub fn ratio(x: f64, y: f64) -> Result<f64> {
    let sum = x + y;
    if sum == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok((x - y) / sum)
}

/// Detector-amplitude ratio from the simulated amplitudes.
pub fn amplitude_ratio(p: &PerturbationParams) -> Result<f64> {
    let amps = detection_amplitudes(p)?;
    ratio(amps.d.re, amps.a.re)
}

/// `-sin(delta) / (mu c cos(delta))` with the mirror, `tan(delta) / mu` without.
pub fn amplitude_ratio_closed_form(p: &PerturbationParams) -> Result<f64> {
    let c = survival_amplitude_closed_form(p.half_cycles);
    let (s, cd) = p.delta.sin_cos();
    let den = p.mu * c * cd;
    if den == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(if p.mirror_present {
        -s / den
    } else {
        s / (p.mu * cd)
    })
}

/// Closed form of the count-level ratio `(P_D - P_A)/(P_D + P_A)`.
///
/// With `x = mu c cos(delta)` and `y` the V amplitude after the protocol
/// (`-sin(delta)` with the mirror, `c sin(delta)` without) this is
/// `2xy / (x^2 + y^2)`.
pub fn intensity_ratio_closed_form(p: &PerturbationParams) -> Result<f64> {
    let c = survival_amplitude_closed_form(p.half_cycles);
    let (s, cd) = p.delta.sin_cos();
    let x = p.mu * c * cd;
    let y = if p.mirror_present { -s } else { c * s };
    let den = x * x + y * y;
    if den == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(2.0 * x * y / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn pp(delta: f64, mu: f64, n: u32) -> PerturbationParams {
        PerturbationParams::new(delta, mu, n).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PerturbationParams::new(-0.1, 1.0, 10).is_err());
        assert!(PerturbationParams::new(FRAC_PI_2, 1.0, 10).is_err());
        assert!(PerturbationParams::new(0.1, 1.5, 10).is_err());
        assert!(PerturbationParams::new(0.1, 1.0, 0).is_err());
    }

    #[test]
    fn unperturbed_detectors_balance() {
        let (pd, pa) = perturbed_probabilities(&pp(0.0, 1.0, 10)).unwrap();
        let c = survival_amplitude_closed_form(10);
        assert!((pd - c * c / 2.0).abs() < 1e-12);
        assert!((pa - c * c / 2.0).abs() < 1e-12);
        assert_eq!(ratio(pd, pa).unwrap(), 0.0);
    }

    #[test]
    fn one_degree_tilt() {
        let p = pp(PI / 180.0, 1.0, 10);
        let r = amplitude_ratio(&p).unwrap();
        assert!((r + 0.022_362_632_526_113_226).abs() < 1e-12, "{r}");
        assert!((amplitude_ratio_closed_form(&p).unwrap() - r).abs() < 1e-12);
    }

    #[test]
    fn amplitudes_match_closed_form() {
        let p = pp(0.2, 0.7, 10);
        let amps = detection_amplitudes(&p).unwrap();
        let c = survival_amplitude_closed_form(10);
        let x = 0.7 * c * 0.2f64.cos();
        assert!((amps.d.re - (x - 0.2f64.sin()) * FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((amps.a.re - (x + 0.2f64.sin()) * FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(amps.d.im, 0.0);
        let (pd, pa) = amps.probabilities();
        assert!(pd >= 0.0 && pa >= 0.0 && pd + pa <= 1.0);
    }

    #[test]
    fn ratio_edge_cases() {
        assert_eq!(ratio(0.3, 0.3).unwrap(), 0.0);
        assert!(matches!(ratio(0.0, 0.0), Err(Error::UndefinedRatio)));
        // delta = 0 with mu = 0 leaves nothing to compare against
        let p = pp(0.0, 0.0, 10);
        let (pd, pa) = perturbed_probabilities(&p).unwrap();
        assert!(matches!(ratio(pd, pa), Err(Error::UndefinedRatio)));
    }

    #[test]
    fn tuned_attenuation_recovers_minus_one() {
        for delta in [0.01, 0.1, PI / 8.0, 0.66] {
            let mu = MuPolicy::WeakValueTuned.mu(delta, 10).unwrap();
            let r = amplitude_ratio(&pp(delta, mu, 10)).unwrap();
            assert!(
                (r + 1.0).abs() <= 4.0 * f64::EPSILON,
                "delta = {delta}: {r}"
            );
        }
        // tuning needs mu = tan(delta)/c <= 1, i.e. delta <= atan(c)
        assert!(MuPolicy::WeakValueTuned.mu(PI / 4.0, 10).is_err());
        assert!(MuPolicy::WeakValueTuned.mu(PI / 4.0, 100_000).is_err());
        let mu = MuPolicy::WeakValueTuned.mu(0.78, 1000).unwrap();
        let r = amplitude_ratio(&pp(0.78, mu, 1000)).unwrap();
        assert!((r + 1.0).abs() < 1e-12);
    }

    #[test]
    fn tan_delta_policy_gives_minus_one_over_c() {
        let c = survival_amplitude_closed_form(10);
        for delta in [0.01, 0.1, PI / 8.0] {
            let mu = MuPolicy::TanDelta.mu(delta, 10).unwrap();
            let r = amplitude_ratio(&pp(delta, mu, 10)).unwrap();
            assert!((r + 1.0 / c).abs() < 1e-12);
        }
        assert!(MuPolicy::WeakValueTuned.mu(1.0, 10).is_err());
    }

    #[test]
    fn mirror_absent_gives_positive_tangent() {
        let p = pp(0.3, 1.0, 10).with_mirror(false);
        assert!((amplitude_ratio(&p).unwrap() - 0.3f64.tan()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn amplitude_ratio_identity(delta in 0.0f64..0.78, mu in 0.1f64..=1.0, n in 2u32..=50, mirror in any::<bool>()) {
            let p = pp(delta, mu, n).with_mirror(mirror);
            let sim = amplitude_ratio(&p).unwrap();
            let closed = amplitude_ratio_closed_form(&p).unwrap();
            prop_assert!((sim - closed).abs() < 1e-12);
        }

        #[test]
        fn intensity_ratio_identity(delta in 0.0f64..1.5, mu in 0.0f64..=1.0, n in 1u32..=50, mirror in any::<bool>()) {
            let p = pp(delta, mu, n).with_mirror(mirror);
            let (pd, pa) = perturbed_probabilities(&p).unwrap();
            prop_assume!(pd + pa > 1e-300);
            let r = ratio(pd, pa).unwrap();
            prop_assert!((-1.0..=1.0).contains(&r));
            prop_assert!((r - intensity_ratio_closed_form(&p).unwrap()).abs() < 1e-9);
        }
    }
}
