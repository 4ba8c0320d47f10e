//! Gaussian transverse pointer read-out of the sigma_x weak value.
//!
//! A birefringent plate displaces the D component of a Gaussian beam by
//! `+a/2` and the A component by `-a/2`. The beam then runs through the
//! protocol, is post-selected on `cos(beta) D + sin(beta) A`, and the
//! centroid of the transmitted intensity is compared with the centroid the
//! D port shows without the protocol.
//!
//! Only the y dependence at x = 0 is sampled; the x factor is common to every
//! term and drops out of all y integrals. Fields are normalised numerically
//! on a uniform grid and integrated with the trapezoidal rule.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarisation::{Basis, Operator2, Polarisation};
use crate::protocol::{left_transfer, survival_amplitude_closed_form, ProtocolParams};
use crate::state::SystemState;
use crate::weak::{intermediate_amplitudes, Observable, DEFAULT_OVERLAP_FLOOR};

pub const DEFAULT_SAMPLES: usize = 4096;
/// Grid half-width is at least this many waists beyond the displacement.
pub const TAIL_WAISTS: f64 = 6.0;

/// Uniform grid on `[-half_width, half_width]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub half_width: f64,
    pub samples: usize,
}

impl Grid {
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.samples - 1) as f64
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.samples - 1) as f64;
        // exactly antisymmetric: y_i = -y_{n-1-i}
        (0..self.samples)
            .map(|i| (2.0 * i as f64 - last) * self.half_width / last)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianPointer {
    /// Beam waist.
    pub w0: f64,
    /// Birefringent separation between the D and A components.
    pub a: f64,
    /// Pre-selection `cos(alpha) D + sin(alpha) A`; `pi/4` is H.
    pub alpha: f64,
    /// Post-selection `cos(beta) D + sin(beta) A`.
    pub beta: f64,
    /// Defaults to `+-(6 w0 + a)` with 4096 samples.
    pub grid: Option<Grid>,
}

impl GaussianPointer {
    pub fn new(w0: f64, a: f64, alpha: f64, beta: f64) -> Result<Self> {
        let gp = GaussianPointer {
            w0,
            a,
            alpha,
            beta,
            grid: None,
        };
        gp.validate()?;
        Ok(gp)
    }

    /// H input (`alpha = pi/4`), post-selected on `beta`.
    pub fn horizontal(w0: f64, a: f64, beta: f64) -> Result<Self> {
        GaussianPointer::new(w0, a, FRAC_PI_4, beta)
    }

    pub fn with_grid(mut self, grid: Grid) -> Self {
        self.grid = Some(grid);
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }

    pub fn required_half_width(&self) -> f64 {
        TAIL_WAISTS * self.w0 + self.a
    }

    pub fn grid(&self) -> Grid {
        self.grid.unwrap_or(Grid {
            half_width: self.required_half_width(),
            samples: DEFAULT_SAMPLES,
        })
    }

    /// `a < w0`; larger separations are accepted but outside the weak regime.
    pub fn weak_coupling(&self) -> bool {
        self.a < self.w0
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.w0 > 0.0 && self.w0.is_finite()) {
            return Err(Error::invalid("w0", "must be positive"));
        }
        if !(self.a >= 0.0 && self.a.is_finite()) {
            return Err(Error::invalid("a", "must be non-negative"));
        }
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta)] {
            if !(0.0..=FRAC_PI_2).contains(&v) {
                return Err(Error::invalid(name, "must lie in [0, pi/2]"));
            }
        }
        let grid = self.grid();
        if grid.samples < 3 {
            return Err(Error::invalid("grid_samples", "need at least 3 samples"));
        }
        let required = self.required_half_width();
        if grid.half_width < required {
            return Err(Error::GridTooSmall {
                half_width: grid.half_width,
                required,
            });
        }
        Ok(())
    }

    /// Unnormalised Gaussian envelope `exp(-(y - centre)^2 / w0^2)`.
    fn envelope(&self, y: f64, centre: f64) -> f64 {
        let u = (y - centre) / self.w0;
        (-u * u).exp()
    }

    /// Pointer-conditioned polarisation at `y`, unnormalised.
    fn polarisation_at(&self, y: f64) -> Polarisation {
        let (s, c) = self.alpha.sin_cos();
        Polarisation::in_basis(
            Basis::Diagonal,
            Complex64::new(c * self.envelope(y, self.a / 2.0), 0.0),
            Complex64::new(s * self.envelope(y, -self.a / 2.0), 0.0),
        )
    }
}

/// Trapezoidal rule on a uniform grid.
pub fn trapezoid(spacing: f64, values: &[f64]) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => spacing * (0.5 * (first + last) + inner.iter().sum::<f64>()),
    }
}

/// Polarisation-resolved field on the y grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TransverseField {
    grid: Grid,
    ys: Vec<f64>,
    pols: Vec<Polarisation>,
}

impl TransverseField {
    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn polarisations(&self) -> &[Polarisation] {
        &self.pols
    }

    /// Amplitudes of one component of `basis` (0 or 1) along the grid.
    pub fn component(&self, basis: Basis, index: usize) -> Vec<Complex64> {
        self.pols
            .iter()
            .map(|p| p.amplitudes(basis)[index])
            .collect()
    }

    pub fn intensity(&self) -> Vec<f64> {
        self.pols.iter().map(Polarisation::norm_sqr).collect()
    }

    pub fn total_intensity(&self) -> f64 {
        trapezoid(self.grid.spacing(), &self.intensity())
    }

    /// `<p|E(y)>` at every grid point.
    pub fn project(&self, p: &Polarisation) -> Profile {
        Profile {
            grid: self.grid,
            ys: self.ys.clone(),
            amplitude: self.pols.iter().map(|e| p.inner(e)).collect(),
        }
    }

    /// Applies a polarisation operator pointwise.
    pub fn map(&self, op: &Operator2) -> TransverseField {
        TransverseField {
            grid: self.grid,
            ys: self.ys.clone(),
            pols: self.pols.iter().map(|p| op.apply(p)).collect(),
        }
    }
}

/// Scalar amplitude on the y grid after a polarisation projection.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    grid: Grid,
    ys: Vec<f64>,
    amplitude: Vec<Complex64>,
}

impl Profile {
    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn amplitude(&self) -> &[Complex64] {
        &self.amplitude
    }

    pub fn intensity(&self) -> Vec<f64> {
        self.amplitude.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn total(&self) -> f64 {
        trapezoid(self.grid.spacing(), &self.intensity())
    }

    /// `int y I(y) dy`.
    pub fn first_moment(&self) -> f64 {
        let weighted: Vec<f64> = self
            .ys
            .iter()
            .zip(self.intensity())
            .map(|(y, i)| y * i)
            .collect();
        trapezoid(self.grid.spacing(), &weighted)
    }

    /// Intensity-weighted mean position.
    pub fn centroid(&self) -> Result<f64> {
        centroid(self.grid.spacing(), &self.ys, &self.intensity())
    }
}

/// `int y I dy / int I dy`.
pub fn centroid(spacing: f64, ys: &[f64], intensity: &[f64]) -> Result<f64> {
    let total = trapezoid(spacing, intensity);
    if total <= DEFAULT_OVERLAP_FLOOR * DEFAULT_OVERLAP_FLOOR {
        return Err(Error::ZeroIntensity);
    }
    let weighted: Vec<f64> = ys.iter().zip(intensity).map(|(y, i)| y * i).collect();
    Ok(trapezoid(spacing, &weighted) / total)
}

/// Field after the birefringent plate, normalised to unit total intensity.
pub fn prepare_pointer(gp: &GaussianPointer) -> Result<TransverseField> {
    gp.validate()?;
    let grid = gp.grid();
    let ys = grid.points();
    let raw: Vec<Polarisation> = ys.iter().map(|&y| gp.polarisation_at(y)).collect();
    let norm: Vec<f64> = raw.iter().map(Polarisation::norm_sqr).collect();
    let scale = Complex64::new(trapezoid(grid.spacing(), &norm).sqrt().recip(), 0.0);
    Ok(TransverseField {
        grid,
        ys,
        pols: raw.into_iter().map(|p| p * scale).collect(),
    })
}

/// What the D port would show without the protocol.
pub fn reference_profile(field: &TransverseField) -> Profile {
    field.project(&Polarisation::diagonal())
}

/// Runs the field through 2N cycles (L-mode block of `U^{2N}`, attenuation kept exact).
pub fn evolve_field(
    field: &TransverseField,
    half_cycles: u32,
    mirror_present: bool,
) -> Result<TransverseField> {
    let params = ProtocolParams::new(half_cycles, mirror_present)?;
    Ok(field.map(&left_transfer(&params, params.cycle_len())))
}

/// Evolves and projects onto `cos(beta) D + sin(beta) A`. The result is unnormalised.
pub fn evolve_postselect(
    field: &TransverseField,
    half_cycles: u32,
    mirror_present: bool,
    beta: f64,
) -> Result<Profile> {
    if !(0.0..=FRAC_PI_2).contains(&beta) {
        return Err(Error::invalid("beta", "must lie in [0, pi/2]"));
    }
    let evolved = evolve_field(field, half_cycles, mirror_present)?;
    let profile = evolved.project(&Polarisation::diagonal_angle(beta));
    if profile.total() <= DEFAULT_OVERLAP_FLOOR * DEFAULT_OVERLAP_FLOOR {
        return Err(Error::ZeroIntensity);
    }
    Ok(profile)
}

/// Everything the pointer experiment reports for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointerSummary {
    /// Centroid at the D port without the protocol.
    pub reference_centroid: f64,
    /// Centroid of the post-selected intensity.
    pub centroid: f64,
    /// `int y I_f dy` in units of the reference-port power `int I_w dy`.
    pub first_moment: f64,
    /// `int I_f dy` for a unit-power input.
    pub postselection_probability: f64,
    /// `centroid / reference_centroid`.
    pub weak_value: f64,
    /// `first_moment / reference_centroid`.
    pub weak_value_moment: f64,
    pub weak_coupling: bool,
}

pub fn measure(
    gp: &GaussianPointer,
    half_cycles: u32,
    mirror_present: bool,
) -> Result<(Profile, PointerSummary)> {
    let field = prepare_pointer(gp)?;
    let reference = reference_profile(&field);
    let reference_centroid = reference.centroid()?;
    let profile = evolve_postselect(&field, half_cycles, mirror_present, gp.beta)?;
    let centroid = profile.centroid()?;
    let first_moment = profile.first_moment() / reference.total();
    let ratio = |x: f64| {
        if reference_centroid == 0.0 {
            Err(Error::invalid("a", "must be positive to read a weak value"))
        } else {
            Ok(x / reference_centroid)
        }
    };
    let summary = PointerSummary {
        reference_centroid,
        centroid,
        first_moment,
        postselection_probability: profile.total(),
        weak_value: ratio(centroid)?,
        weak_value_moment: ratio(first_moment)?,
        weak_coupling: gp.weak_coupling(),
    };
    Ok((profile, summary))
}

/// Post-selected centroid divided by the reference centroid.
pub fn weak_value_from_centroids(
    gp: &GaussianPointer,
    half_cycles: u32,
    mirror_present: bool,
) -> Result<f64> {
    if gp.a <= 0.0 {
        return Err(Error::invalid("a", "must be positive to read a weak value"));
    }
    Ok(measure(gp, half_cycles, mirror_present)?.1.weak_value)
}

fn check_step(n: usize, half_cycles: u32) -> Result<()> {
    if half_cycles == 0 {
        return Err(Error::invalid("N", "must be a positive integer"));
    }
    if n > 2 * half_cycles as usize {
        return Err(Error::invalid("n", "must lie in [0, 2N]"));
    }
    Ok(())
}

fn sine_factor(n: usize, half_cycles: u32) -> f64 {
    let eps = crate::protocol::epsilon(half_cycles);
    let total = 2 * half_cycles as usize;
    ((total - n) as f64 * eps).sin() * (n as f64 * eps).sin()
}

/// Large-N closed form of the weak value of `|R><R|` at step `n`, pointer position `y`:
/// `sin((2N-n) pi/2N) sin(n pi/2N) (1 - exp(2 a y / w0^2)) / 2`.
///
/// Derived for `alpha = pi/4` with `cos^{2N}(pi/2N)` set to 1.
pub fn projector_r_weak_profile(
    n: usize,
    half_cycles: u32,
    y: f64,
    gp: &GaussianPointer,
) -> Result<f64> {
    check_step(n, half_cycles)?;
    let r = (2.0 * gp.a * y / (gp.w0 * gp.w0)).exp();
    Ok(sine_factor(n, half_cycles) * (1.0 - r) / 2.0)
}

/// The same weak value with the attenuation `c = cos^{2N}(pi/2N)` kept:
/// `S (1 - r) / ((1 + c) - r (1 - c))`, `r = exp(2 a y / w0^2)`.
pub fn projector_r_weak_exact(
    n: usize,
    half_cycles: u32,
    y: f64,
    gp: &GaussianPointer,
) -> Result<f64> {
    check_step(n, half_cycles)?;
    let c = survival_amplitude_closed_form(half_cycles);
    let r = (2.0 * gp.a * y / (gp.w0 * gp.w0)).exp();
    let den = (1.0 + c) - r * (1.0 - c);
    if den.abs() <= DEFAULT_OVERLAP_FLOOR {
        return Err(Error::UndefinedWeakValue {
            numerator: Complex64::new(sine_factor(n, half_cycles) * (1.0 - r), 0.0),
            denominator: Complex64::new(den, 0.0),
        });
    }
    Ok(sine_factor(n, half_cycles) * (1.0 - r) / den)
}

/// Simulated numerators and denominators of the `|R><R|` weak value for the
/// D and A pre-selections, post-selected on `<L, D|` after 2N cycles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectorAmplitudes {
    pub numerator_d: Complex64,
    pub numerator_a: Complex64,
    pub denominator_d: Complex64,
    pub denominator_a: Complex64,
}

pub fn projector_r_amplitudes(n: usize, half_cycles: u32) -> Result<ProjectorAmplitudes> {
    check_step(n, half_cycles)?;
    let params = ProtocolParams::new(half_cycles, true)?;
    let post = SystemState::on_left(Polarisation::diagonal());
    let obs = Observable::projector_right();
    let (numerator_d, denominator_d) = intermediate_amplitudes(
        &obs,
        &SystemState::on_left(Polarisation::diagonal()),
        &post,
        &params,
        n,
    )?;
    let (numerator_a, denominator_a) = intermediate_amplitudes(
        &obs,
        &SystemState::on_left(Polarisation::antidiagonal()),
        &post,
        &params,
        n,
    )?;
    Ok(ProjectorAmplitudes {
        numerator_d,
        numerator_a,
        denominator_d,
        denominator_a,
    })
}

impl ProjectorAmplitudes {
    /// Weak value for the pointer-conditioned state at `y`.
    pub fn at(&self, y: f64, gp: &GaussianPointer) -> Result<Complex64> {
        let [wd, wa] = gp.polarisation_at(y).amplitudes(Basis::Diagonal);
        let numerator = wd * self.numerator_d + wa * self.numerator_a;
        let denominator = wd * self.denominator_d + wa * self.denominator_a;
        crate::weak::ratio_or_undefined(numerator, denominator, DEFAULT_OVERLAP_FLOOR)
    }
}

/// Direct weak value `<L,D| U^{2N-n} P_R U^n |E_w(y), L> / <L,D| U^{2N} |E_w(y), L>`.
pub fn projector_r_weak_direct(
    n: usize,
    half_cycles: u32,
    y: f64,
    gp: &GaussianPointer,
) -> Result<Complex64> {
    projector_r_amplitudes(n, half_cycles)?.at(y, gp)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HPolariserResult {
    pub profile: Profile,
    pub centroid: f64,
}

/// H polariser between the plate and the protocol, then post-selection on D.
pub fn h_polariser_variant(
    gp: &GaussianPointer,
    half_cycles: u32,
    mirror_present: bool,
) -> Result<HPolariserResult> {
    let field = prepare_pointer(gp)?.map(&Operator2::projector(&Polarisation::horizontal()));
    let profile = evolve_postselect(&field, half_cycles, mirror_present, 0.0)?;
    let centroid = profile.centroid()?;
    Ok(HPolariserResult { profile, centroid })
}
