//! Dispatch from a validated config to the simulator.

use std::path::PathBuf;

use cheshire_core::experiments::perturbation::{
    amplitude_ratio_closed_form, intensity_ratio_closed_form,
};
use cheshire_core::experiments::{homodyne_run, monte_carlo, snr_scan};
use cheshire_core::pointer::{
    h_polariser_variant, measure, prepare_pointer, projector_r_amplitudes, projector_r_weak_exact,
    projector_r_weak_profile, reference_profile,
};
use cheshire_core::protocol::step_in_place;
use cheshire_core::weak::{sigma_x_weak_analytic, sigma_x_weak_approx, sigma_x_weak_simulated};
use cheshire_core::{
    make_initial, survival_amplitude_closed_form, Component, Error as CoreError, ModeIndex,
    ProtocolParams,
};
use serde_json::json;
use thiserror::Error;

use crate::config::{ConfigError, ConfigErrors, Experiment, ExperimentConfig};
use crate::format::{render, Cell, Report, Table};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Config(ConfigErrors),
    /// A module reported a mathematically undefined quantity.
    #[error("undefined value: {0}")]
    Undefined(CoreError),
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            RunError::Undefined(_) => 3,
            RunError::Io { .. } => 1,
        }
    }

    /// One-line JSON error record.
    pub fn record(&self) -> String {
        let value = match self {
            RunError::Config(errs) => json!({
                "error": "config",
                "exit_code": 2,
                "messages": errs.0.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
            RunError::Undefined(e) => json!({
                "error": "undefined-value",
                "exit_code": 3,
                "message": e.to_string(),
            }),
            RunError::Io { .. } => json!({
                "error": "io",
                "exit_code": 1,
                "message": self.to_string(),
            }),
        };
        value.to_string()
    }
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        if e.is_undefined_value() {
            RunError::Undefined(e)
        } else {
            RunError::Config(ConfigErrors(vec![ConfigError {
                line: None,
                key: None,
                message: e.to_string(),
            }]))
        }
    }
}

impl From<ConfigErrors> for RunError {
    fn from(e: ConfigErrors) -> Self {
        RunError::Config(e)
    }
}

/// Runs the experiment and renders it in the configured format.
pub fn run_to_string(config: &ExperimentConfig) -> Result<String, RunError> {
    Ok(render(config, &execute(config)?))
}

/// Runs and writes to `config.out`, or returns the text for standard output.
pub fn run(config: &ExperimentConfig) -> Result<Option<String>, RunError> {
    let text = run_to_string(config)?;
    match &config.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| RunError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

pub fn execute(config: &ExperimentConfig) -> Result<Report, RunError> {
    match &config.experiment {
        Experiment::Evolve {
            half_cycles,
            mirror_present,
            input,
            steps,
        } => evolve(*half_cycles, *mirror_present, input.polarisation(), *steps),
        Experiment::WeakValue {
            half_cycles,
            mirror_present,
            betas,
        } => weak_value_table(*half_cycles, *mirror_present, betas),
        Experiment::Homodyne { half_cycles } => homodyne(half_cycles),
        Experiment::PerturbScan {
            half_cycles,
            deltas,
            policy,
            shots,
        } => {
            let rows = snr_scan(deltas, *policy, *half_cycles, *shots, config.seed)?;
            let mut table = Table::new(&[
                "delta",
                "mu",
                "N",
                "P_D",
                "P_A",
                "ratio_closed",
                "ratio_empirical",
                "stderr",
                "z",
            ]);
            for r in &rows {
                table.push(vec![
                    r.delta.into(),
                    r.mu.into(),
                    r.half_cycles.into(),
                    r.p_d.into(),
                    r.p_a.into(),
                    r.ratio_closed.into(),
                    r.ratio_empirical.into(),
                    r.stderr.into(),
                    r.z.into(),
                ]);
            }
            Ok(Report {
                summary: vec![
                    ("shots", (*shots).into()),
                    ("mu_policy", policy.name().into()),
                ],
                table,
                table_in_json: true,
            })
        }
        Experiment::MonteCarlo { params, shots } => {
            let s = monte_carlo(params, *shots, config.seed)?;
            let fields: Vec<(&'static str, Cell)> = vec![
                ("delta", params.delta.into()),
                ("mu", params.mu.into()),
                ("N", params.half_cycles.into()),
                ("mirror_present", params.mirror_present.into()),
                ("shots", s.shots.into()),
                ("D_counts", s.dd.into()),
                ("A_counts", s.da.into()),
                ("lost", s.lost().into()),
                ("ratio", s.ratio.into()),
                ("stderr", s.stderr.into()),
                (
                    "ratio_closed",
                    intensity_ratio_closed_form(params).ok().into(),
                ),
                ("amplitude_ratio", s.amplitude_ratio.into()),
                ("amplitude_stderr", s.amplitude_stderr.into()),
                (
                    "amplitude_ratio_closed",
                    amplitude_ratio_closed_form(params).ok().into(),
                ),
            ];
            Ok(single_row(fields))
        }
        Experiment::Pointer {
            pointer,
            half_cycles,
            mirror_present,
            h_polariser,
        } => {
            if *h_polariser {
                let variant = h_polariser_variant(pointer, *half_cycles, *mirror_present)?;
                let mut table = Table::new(&["y", "intensity"]);
                for (y, i) in variant.profile.ys().iter().zip(variant.profile.intensity()) {
                    table.push(vec![(*y).into(), i.into()]);
                }
                return Ok(Report {
                    summary: vec![
                        ("centroid", variant.centroid.into()),
                        ("postselection_probability", variant.profile.total().into()),
                        ("weak_coupling", pointer.weak_coupling().into()),
                    ],
                    table,
                    table_in_json: false,
                });
            }
            let (profile, s) = measure(pointer, *half_cycles, *mirror_present)?;
            let reference = reference_profile(&prepare_pointer(pointer)?);
            let mut table = Table::new(&["y", "intensity", "reference_intensity"]);
            for ((y, i), r) in profile
                .ys()
                .iter()
                .zip(profile.intensity())
                .zip(reference.intensity())
            {
                table.push(vec![(*y).into(), i.into(), r.into()]);
            }
            Ok(Report {
                summary: vec![
                    ("reference_centroid", s.reference_centroid.into()),
                    ("centroid", s.centroid.into()),
                    ("first_moment", s.first_moment.into()),
                    (
                        "postselection_probability",
                        s.postselection_probability.into(),
                    ),
                    ("weak_value", s.weak_value.into()),
                    ("weak_value_moment", s.weak_value_moment.into()),
                    ("weak_coupling", s.weak_coupling.into()),
                ],
                table,
                table_in_json: false,
            })
        }
        Experiment::ProjectorProfile {
            pointer,
            half_cycles,
            steps,
            ys,
        } => {
            let mut table = Table::new(&["n", "y", "closed_form", "finite_n", "direct"]);
            for &n in steps {
                let amps = projector_r_amplitudes(n, *half_cycles)?;
                for &y in ys {
                    let direct = amps.at(y, pointer)?;
                    table.push(vec![
                        n.into(),
                        y.into(),
                        projector_r_weak_profile(n, *half_cycles, y, pointer)?.into(),
                        projector_r_weak_exact(n, *half_cycles, y, pointer)?.into(),
                        direct.re.into(),
                    ]);
                }
            }
            Ok(Report {
                summary: vec![(
                    "survival_amplitude",
                    survival_amplitude_closed_form(*half_cycles).into(),
                )],
                table,
                table_in_json: true,
            })
        }
    }
}

fn single_row(fields: Vec<(&'static str, Cell)>) -> Report {
    let columns: Vec<&'static str> = fields.iter().map(|(k, _)| *k).collect();
    let mut table = Table::new(&columns);
    table.push(fields.iter().map(|(_, v)| v.clone()).collect());
    Report {
        summary: fields,
        table,
        table_in_json: false,
    }
}

fn evolve(
    half_cycles: u32,
    mirror_present: bool,
    input: cheshire_core::Polarisation,
    steps: usize,
) -> Result<Report, RunError> {
    let params = ProtocolParams::new(half_cycles, mirror_present)?;
    let mut state = make_initial(input)?;
    let mut table = Table::new(&[
        "step",
        "L_H_re",
        "L_H_im",
        "L_V_re",
        "L_V_im",
        "R_H_re",
        "R_H_im",
        "R_V_re",
        "R_V_im",
        "leak_probability",
        "norm",
    ]);
    for k in 0..=steps {
        if k > 0 {
            step_in_place(&mut state, &params);
        }
        let mut row: Vec<Cell> = vec![k.into()];
        for mode in [ModeIndex::Left, ModeIndex::Right] {
            for pol in [Component::H, Component::V] {
                let amp = state.amplitude(mode, pol);
                row.push(amp.re.into());
                row.push(amp.im.into());
            }
        }
        row.push(state.leak_probability().into());
        row.push(state.norm_sqr().into());
        table.push(row);
    }
    Ok(Report {
        summary: vec![(
            "survival_amplitude",
            survival_amplitude_closed_form(half_cycles).into(),
        )],
        table,
        table_in_json: true,
    })
}

fn weak_value_table(
    half_cycles: u32,
    mirror_present: bool,
    betas: &[f64],
) -> Result<Report, RunError> {
    let mut table = Table::new(&[
        "beta",
        "N",
        "mirror_present",
        "simulated_re",
        "simulated_im",
        "analytic",
        "large_n",
    ]);
    for &beta in betas {
        let sim = sigma_x_weak_simulated(beta, half_cycles, mirror_present)?;
        table.push(vec![
            beta.into(),
            half_cycles.into(),
            mirror_present.into(),
            sim.re.into(),
            sim.im.into(),
            sigma_x_weak_analytic(beta, half_cycles, mirror_present)?.into(),
            sigma_x_weak_approx(beta, mirror_present)?.into(),
        ]);
    }
    Ok(Report {
        summary: Vec::new(),
        table,
        table_in_json: true,
    })
}

fn homodyne(half_cycles: &[u32]) -> Result<Report, RunError> {
    let mut table = Table::new(&["N", "mirror_present", "P_D0", "P_D1", "P_loss"]);
    let mut identical = true;
    for &n in half_cycles {
        let present = homodyne_run(n, true)?;
        let absent = homodyne_run(n, false)?;
        identical &= present == absent;
        for (mirror, r) in [(true, present), (false, absent)] {
            table.push(vec![
                n.into(),
                mirror.into(),
                r.p_d0.into(),
                r.p_d1.into(),
                r.p_loss.into(),
            ]);
        }
    }
    Ok(Report {
        summary: vec![("mirror_settings_identical", identical.into())],
        table,
        table_in_json: true,
    })
}
