//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function has a plain Rust twin (`*_data`) that the native
//! tests drive; the exported wrapper only converts errors for JavaScript.

use std::f64::consts::FRAC_PI_2;

use cheshire_core::experiments::{snr_scan, MuPolicy};
use cheshire_core::pointer::{
    h_polariser_variant, measure, prepare_pointer, reference_profile, GaussianPointer, Grid,
};
use cheshire_core::weak::{sigma_x_weak_analytic, sigma_x_weak_approx, sigma_x_weak_simulated};
use cheshire_core::Result;
use wasm_bindgen::prelude::*;

/// sigma_x weak value sampled over the post-selection angle.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct WeakValueCurve {
    betas: Vec<f64>,
    simulated: Vec<f64>,
    analytic: Vec<f64>,
    large_n: Vec<f64>,
}

#[wasm_bindgen]
impl WeakValueCurve {
    #[wasm_bindgen(getter)]
    pub fn betas(&self) -> Vec<f64> {
        self.betas.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn simulated(&self) -> Vec<f64> {
        self.simulated.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn analytic(&self) -> Vec<f64> {
        self.analytic.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn large_n(&self) -> Vec<f64> {
        self.large_n.clone()
    }
}

/// `points` angles evenly spaced in `[0, beta_max]`, `beta_max < pi/2`.
pub fn weak_value_curve_data(
    half_cycles: u32,
    mirror_present: bool,
    beta_max: f64,
    points: usize,
) -> Result<WeakValueCurve> {
    if !(0.0..FRAC_PI_2).contains(&beta_max) {
        return Err(cheshire_core::Error::invalid(
            "beta_max",
            "must lie in [0, pi/2)",
        ));
    }
    if points < 2 {
        return Err(cheshire_core::Error::invalid("points", "need at least 2"));
    }
    let mut curve = WeakValueCurve {
        betas: Vec::with_capacity(points),
        simulated: Vec::with_capacity(points),
        analytic: Vec::with_capacity(points),
        large_n: Vec::with_capacity(points),
    };
    for i in 0..points {
        let beta = beta_max * i as f64 / (points - 1) as f64;
        curve.betas.push(beta);
        curve
            .simulated
            .push(sigma_x_weak_simulated(beta, half_cycles, mirror_present)?.re);
        curve
            .analytic
            .push(sigma_x_weak_analytic(beta, half_cycles, mirror_present)?);
        curve
            .large_n
            .push(sigma_x_weak_approx(beta, mirror_present)?);
    }
    Ok(curve)
}

#[wasm_bindgen]
pub fn weak_value_curve(
    half_cycles: u32,
    mirror_present: bool,
    beta_max: f64,
    points: usize,
) -> std::result::Result<WeakValueCurve, JsError> {
    weak_value_curve_data(half_cycles, mirror_present, beta_max, points).map_err(to_js)
}

/// Post-selected pointer intensity next to the reference-port intensity.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct PointerView {
    ys: Vec<f64>,
    intensity: Vec<f64>,
    reference: Vec<f64>,
    centroid: f64,
    reference_centroid: f64,
    first_moment: f64,
    probability: f64,
}

#[wasm_bindgen]
impl PointerView {
    #[wasm_bindgen(getter)]
    pub fn ys(&self) -> Vec<f64> {
        self.ys.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn intensity(&self) -> Vec<f64> {
        self.intensity.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn reference(&self) -> Vec<f64> {
        self.reference.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn centroid(&self) -> f64 {
        self.centroid
    }

    #[wasm_bindgen(getter)]
    pub fn reference_centroid(&self) -> f64 {
        self.reference_centroid
    }

    /// `int y I_f dy / int I_w dy`; NaN for the H-polariser variant.
    #[wasm_bindgen(getter)]
    pub fn first_moment(&self) -> f64 {
        self.first_moment
    }

    #[wasm_bindgen(getter)]
    pub fn probability(&self) -> f64 {
        self.probability
    }
}

/// Horizontal-input pointer with `samples` grid points.
pub fn pointer_profile_data(
    half_cycles: u32,
    mirror_present: bool,
    a: f64,
    w0: f64,
    beta: f64,
    h_polariser: bool,
    samples: usize,
) -> Result<PointerView> {
    let gp = GaussianPointer::horizontal(w0, a, beta)?;
    let grid = Grid {
        samples,
        ..gp.grid()
    };
    let gp = gp.with_grid(grid);
    gp.validate()?;
    let reference = reference_profile(&prepare_pointer(&gp)?);
    let reference_centroid = reference.centroid()?;
    if h_polariser {
        let v = h_polariser_variant(&gp, half_cycles, mirror_present)?;
        return Ok(PointerView {
            ys: v.profile.ys().to_vec(),
            intensity: v.profile.intensity(),
            reference: reference.intensity(),
            centroid: v.centroid,
            reference_centroid,
            first_moment: f64::NAN,
            probability: v.profile.total(),
        });
    }
    let (profile, s) = measure(&gp, half_cycles, mirror_present)?;
    Ok(PointerView {
        ys: profile.ys().to_vec(),
        intensity: profile.intensity(),
        reference: reference.intensity(),
        centroid: s.centroid,
        reference_centroid,
        first_moment: s.first_moment,
        probability: s.postselection_probability,
    })
}

#[wasm_bindgen]
pub fn pointer_profile(
    half_cycles: u32,
    mirror_present: bool,
    a: f64,
    w0: f64,
    beta: f64,
    h_polariser: bool,
    samples: usize,
) -> std::result::Result<PointerView, JsError> {
    pointer_profile_data(
        half_cycles,
        mirror_present,
        a,
        w0,
        beta,
        h_polariser,
        samples,
    )
    .map_err(to_js)
}

/// Seeded photon-counting scan over the input tilt.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct ScanView {
    deltas: Vec<f64>,
    ratio_closed: Vec<f64>,
    ratio_empirical: Vec<f64>,
    stderr: Vec<f64>,
    z: Vec<f64>,
}

#[wasm_bindgen]
impl ScanView {
    #[wasm_bindgen(getter)]
    pub fn deltas(&self) -> Vec<f64> {
        self.deltas.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn ratio_closed(&self) -> Vec<f64> {
        self.ratio_closed.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn ratio_empirical(&self) -> Vec<f64> {
        self.ratio_empirical.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn stderr(&self) -> Vec<f64> {
        self.stderr.clone()
    }

    /// Mirror present vs absent, in standard errors.
    #[wasm_bindgen(getter)]
    pub fn z(&self) -> Vec<f64> {
        self.z.clone()
    }
}

/// Fixed attenuation `mu`; undefined entries come back as NaN.
pub fn snr_scan_data(
    half_cycles: u32,
    mu: f64,
    delta_max: f64,
    points: usize,
    shots: u64,
    seed: u64,
) -> Result<ScanView> {
    if points < 2 {
        return Err(cheshire_core::Error::invalid("points", "need at least 2"));
    }
    let deltas: Vec<f64> = (0..points)
        .map(|i| delta_max * i as f64 / (points - 1) as f64)
        .collect();
    let rows = snr_scan(&deltas, MuPolicy::Fixed(mu), half_cycles, shots, seed)?;
    let nan = |x: Option<f64>| x.unwrap_or(f64::NAN);
    Ok(ScanView {
        deltas,
        ratio_closed: rows.iter().map(|r| nan(r.ratio_closed)).collect(),
        ratio_empirical: rows.iter().map(|r| nan(r.ratio_empirical)).collect(),
        stderr: rows.iter().map(|r| nan(r.stderr)).collect(),
        z: rows.iter().map(|r| nan(r.z)).collect(),
    })
}

/// `seed` arrives as a double from JavaScript and is truncated.
#[wasm_bindgen]
pub fn perturb_scan(
    half_cycles: u32,
    mu: f64,
    delta_max: f64,
    points: usize,
    shots: f64,
    seed: f64,
) -> std::result::Result<ScanView, JsError> {
    snr_scan_data(
        half_cycles,
        mu,
        delta_max,
        points,
        shots as u64,
        seed as u64,
    )
    .map_err(to_js)
}

fn to_js(e: cheshire_core::Error) -> JsError {
    JsError::new(&e.to_string())
}
