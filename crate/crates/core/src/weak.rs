//! Pre/post-selected weak values.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarisation::{Operator2, Polarisation};
use crate::protocol::{evolve, survival_amplitude_closed_form, ProtocolParams};
use crate::state::{make_initial, ModeIndex, SystemState};

/// Overlaps with magnitude at or below this are treated as zero.
pub const DEFAULT_OVERLAP_FLOOR: f64 = 1e-14;

/// A polarisation operator, optionally tensored with a single-mode projector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observable {
    pub polarisation: Operator2,
    /// `None` acts on every mode.
    pub mode: Option<ModeIndex>,
}

impl Observable {
    pub fn identity() -> Self {
        Observable {
            polarisation: Operator2::identity(),
            mode: None,
        }
    }

    pub fn sigma_x() -> Self {
        Observable {
            polarisation: Operator2::sigma_x(),
            mode: None,
        }
    }

    /// `|R><R|` on the right-hand cavity mode.
    pub fn projector_right() -> Self {
        Observable {
            polarisation: Operator2::identity(),
            mode: Some(ModeIndex::Right),
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.polarisation.is_hermitian(tol)
    }

    pub fn apply(&self, state: &SystemState) -> SystemState {
        let op = &self.polarisation;
        match self.mode {
            None => SystemState {
                left: op.apply(&state.left),
                right: op.apply(&state.right),
                leaks: state.leaks.iter().map(|p| op.apply(p)).collect(),
                steps: state.steps,
            },
            Some(mode) => {
                let mut out = state.restricted_to(mode);
                match mode {
                    ModeIndex::Left => out.left = op.apply(&out.left),
                    ModeIndex::Right => out.right = op.apply(&out.right),
                    ModeIndex::Leak(k) => {
                        if let Some(p) = out.leaks.get_mut(k) {
                            *p = op.apply(p);
                        }
                    }
                }
                out
            }
        }
    }

    /// `<f|A|i>`.
    pub fn matrix_element(&self, psi_f: &SystemState, psi_i: &SystemState) -> Complex64 {
        psi_f.inner(&self.apply(psi_i))
    }
}

/// `<f|A|i> / <f|i>` with the default overlap floor.
pub fn weak_value(obs: &Observable, psi_i: &SystemState, psi_f: &SystemState) -> Result<Complex64> {
    weak_value_with_floor(obs, psi_i, psi_f, DEFAULT_OVERLAP_FLOOR)
}

pub fn weak_value_with_floor(
    obs: &Observable,
    psi_i: &SystemState,
    psi_f: &SystemState,
    floor: f64,
) -> Result<Complex64> {
    let numerator = obs.matrix_element(psi_f, psi_i);
    let denominator = psi_f.inner(psi_i);
    ratio_or_undefined(numerator, denominator, floor)
}

pub(crate) fn ratio_or_undefined(
    numerator: Complex64,
    denominator: Complex64,
    floor: f64,
) -> Result<Complex64> {
    if denominator.norm() <= floor {
        return Err(Error::UndefinedWeakValue {
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

/// Weak value of `obs` at intermediate step `n` of a protocol:
/// `<f| U^{T-n} A U^n |i> / <f| U^T |i>` with `T = params.steps()`.
///
/// `psi_f` is the post-selection at the final time.
pub fn intermediate_weak_value(
    obs: &Observable,
    psi_i: &SystemState,
    psi_f: &SystemState,
    params: &ProtocolParams,
    n: usize,
) -> Result<Complex64> {
    let (numerator, denominator) = intermediate_amplitudes(obs, psi_i, psi_f, params, n)?;
    ratio_or_undefined(numerator, denominator, DEFAULT_OVERLAP_FLOOR)
}

/// Numerator and denominator of [`intermediate_weak_value`], both linear in `psi_i`.
pub fn intermediate_amplitudes(
    obs: &Observable,
    psi_i: &SystemState,
    psi_f: &SystemState,
    params: &ProtocolParams,
    n: usize,
) -> Result<(Complex64, Complex64)> {
    let total = params.steps();
    if n > total {
        return Err(Error::invalid("n", format!("must not exceed {total}")));
    }
    let mid = obs.apply(&evolve(psi_i, params, n));
    let numerator = psi_f.inner(&evolve(&mid, params, total - n));
    let denominator = psi_f.inner(&evolve(psi_i, params, total));
    Ok((numerator, denominator))
}

/// Post-selection `(cos(beta) c H - sin(beta) V) (x) L` with `c = cos^{2N}(pi/2N)`,
/// stored unnormalised.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PostSelection {
    pub beta: f64,
}

impl PostSelection {
    pub fn new(beta: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&beta) {
            return Err(Error::invalid("beta", "must lie in [0, pi/2]"));
        }
        Ok(PostSelection { beta })
    }

    pub fn state(&self, half_cycles: u32) -> SystemState {
        let c = survival_amplitude_closed_form(half_cycles);
        let (s, cb) = self.beta.sin_cos();
        SystemState::on_left(Polarisation::real(cb * c, -s))
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta == FRAC_PI_2 {
        return Err(Error::Divergent);
    }
    if !(0.0..FRAC_PI_2).contains(&beta) {
        return Err(Error::invalid("beta", "must lie in [0, pi/2)"));
    }
    Ok(())
}

/// Exact finite-N weak value of sigma_x for pre-selection `H (x) L`.
///
/// Mirror present: `-sin(beta) / (cos(beta) cos^{2N}(pi/2N))`. Mirror absent
/// both polarisations are attenuated equally and the value is `tan(beta)`.
pub fn sigma_x_weak_analytic(beta: f64, half_cycles: u32, mirror_present: bool) -> Result<f64> {
    check_beta(beta)?;
    if half_cycles == 0 {
        return Err(Error::invalid("N", "must be a positive integer"));
    }
    if mirror_present {
        let c = survival_amplitude_closed_form(half_cycles);
        let den = beta.cos() * c;
        if den.abs() <= DEFAULT_OVERLAP_FLOOR {
            return Err(Error::Divergent);
        }
        Ok(-beta.sin() / den)
    } else {
        Ok(beta.tan())
    }
}

/// Large-N limit: `-tan(beta)` with the mirror, `+tan(beta)` without.
pub fn sigma_x_weak_approx(beta: f64, mirror_present: bool) -> Result<f64> {
    check_beta(beta)?;
    let t = beta.tan();
    Ok(if mirror_present { -t } else { t })
}

/// Weak value of sigma_x from simulated states.
///
/// Pre-selection is `H (x) L`; post-selection is `U^{2N} (cos(beta) H + sin(beta) V) (x) L`
/// restricted to the L mode. The overlap is exactly zero at `beta = pi/2`.
pub fn sigma_x_weak_simulated(
    beta: f64,
    half_cycles: u32,
    mirror_present: bool,
) -> Result<Complex64> {
    if !(0.0..=FRAC_PI_2).contains(&beta) {
        return Err(Error::invalid("beta", "must lie in [0, pi/2]"));
    }
    let params = ProtocolParams::new(half_cycles, mirror_present)?;
    let psi_i = make_initial(Polarisation::horizontal())?;
    let probe = make_initial(Polarisation::tilted(beta))?;
    let psi_f = evolve(&probe, &params, params.cycle_len()).restricted_to(ModeIndex::Left);
    weak_value(&Observable::sigma_x(), &psi_i, &psi_f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, PI};

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn identity_weak_value_is_one() {
        let s = make_initial(Polarisation::new(
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        ))
        .unwrap();
        let w = weak_value(&Observable::identity(), &s, &s).unwrap();
        assert!((w - one()).norm() < 1e-15);
    }

    #[test]
    fn sigma_x_h_to_a_is_minus_one() {
        let i = make_initial(Polarisation::horizontal()).unwrap();
        let f = make_initial(Polarisation::antidiagonal()).unwrap();
        let w = weak_value(&Observable::sigma_x(), &i, &f).unwrap();
        assert!((w + one()).norm() < 1e-15);
    }

    #[test]
    fn sigma_x_h_to_h_is_zero() {
        let h = make_initial(Polarisation::horizontal()).unwrap();
        let w = weak_value(&Observable::sigma_x(), &h, &h).unwrap();
        assert_eq!(w, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn orthogonal_postselection_is_undefined() {
        let h = make_initial(Polarisation::horizontal()).unwrap();
        let v = make_initial(Polarisation::vertical()).unwrap();
        match weak_value(&Observable::sigma_x(), &h, &v) {
            Err(Error::UndefinedWeakValue {
                numerator,
                denominator,
            }) => {
                assert_eq!(denominator, Complex64::new(0.0, 0.0));
                assert_eq!(numerator, one());
            }
            other => panic!("expected undefined weak value, got {other:?}"),
        }
        assert!(matches!(
            sigma_x_weak_simulated(FRAC_PI_2, 10, true),
            Err(Error::UndefinedWeakValue { .. })
        ));
    }

    #[test]
    fn floor_is_configurable() {
        let i = make_initial(Polarisation::horizontal()).unwrap();
        let f = make_initial(Polarisation::tilted(FRAC_PI_2 - 1e-9)).unwrap();
        assert!(weak_value(&Observable::sigma_x(), &i, &f).is_ok());
        assert!(weak_value_with_floor(&Observable::sigma_x(), &i, &f, 1e-6).is_err());
    }

    #[test]
    fn shipped_observables_are_hermitian() {
        assert!(Observable::sigma_x().is_hermitian(1e-12));
        assert!(Observable::projector_right().is_hermitian(1e-12));
    }

    #[test]
    fn analytic_values() {
        assert_eq!(sigma_x_weak_analytic(0.0, 10, true).unwrap(), 0.0);
        assert_eq!(sigma_x_weak_analytic(0.0, 3, false).unwrap(), 0.0);
        // -tan(pi/6) / cos^20(pi/20)
        let w = sigma_x_weak_analytic(FRAC_PI_6, 10, true).unwrap();
        assert!((w + 0.739_674_814_263_699_2).abs() < 1e-12, "{w}");
        // large-N limit at pi/4
        let far = sigma_x_weak_analytic(FRAC_PI_4, 1_000_000, true).unwrap();
        assert!((far + 1.0).abs() < 1e-5);
        assert!((sigma_x_weak_analytic(FRAC_PI_4, 10, false).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(
            sigma_x_weak_analytic(FRAC_PI_2, 10, true),
            Err(Error::Divergent)
        ));
        assert!(matches!(
            sigma_x_weak_approx(FRAC_PI_2, false),
            Err(Error::Divergent)
        ));
    }

    #[test]
    fn postselection_state_matches_simulated() {
        for beta in [0.0, 0.3, FRAC_PI_4, 1.2] {
            let ps = PostSelection::new(beta).unwrap().state(10);
            let p = ProtocolParams::new(10, true).unwrap();
            let sim = evolve(&make_initial(Polarisation::tilted(beta)).unwrap(), &p, 20)
                .restricted_to(ModeIndex::Left);
            assert!(ps.max_abs_diff(&sim) < 1e-12);
        }
        assert!(PostSelection::new(2.0).is_err());
    }

    #[test]
    fn simulated_matches_exact_form_at_pi_over_4() {
        let w = sigma_x_weak_simulated(FRAC_PI_4, 10, true).unwrap();
        assert!((w.re + 1.281_154_359_383_799_5).abs() < 1e-9, "{w}");
        assert!(w.im.abs() < 1e-12);
        for n in [2u32, 3, 10, 77] {
            let w = sigma_x_weak_simulated(FRAC_PI_4, n, false).unwrap();
            assert!((w.re - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn magnitude_grows_with_beta() {
        for mirror in [true, false] {
            let mut last = -1.0;
            for k in 0..200 {
                let beta = k as f64 * (PI / 2.0) / 200.0;
                let w = sigma_x_weak_analytic(beta, 10, mirror).unwrap().abs();
                assert!(w > last);
                last = w;
            }
        }
    }

    #[test]
    fn intermediate_weak_value_endpoints() {
        // At n = 0 or n = 2N the projector onto R sees no amplitude.
        let p = ProtocolParams::new(5, true).unwrap();
        let i = make_initial(Polarisation::diagonal()).unwrap();
        let f = SystemState::on_left(Polarisation::diagonal());
        for n in [0, 10] {
            let w = intermediate_weak_value(&Observable::projector_right(), &i, &f, &p, n).unwrap();
            assert!(w.norm() < 1e-12);
        }
        assert!(intermediate_weak_value(&Observable::projector_right(), &i, &f, &p, 11).is_err());
    }
}
