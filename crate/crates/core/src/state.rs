//! Single-photon state over cavity modes and polarisation.

use std::collections::VecDeque;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polarisation::{Component, Polarisation};

/// Spatial mode of the wave-packet at a stroboscopic time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeIndex {
    /// At the leftmost wall.
    Left,
    /// Just reflected at the right-hand (polarising) wall.
    Right,
    /// Transmitted out through the right-hand wall `k` cycles ago.
    Leak(usize),
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeIndex::Left => write!(f, "L"),
            ModeIndex::Right => write!(f, "R"),
            ModeIndex::Leak(k) => write!(f, "Leak({k})"),
        }
    }
}

/// Dense amplitudes over `{L, R, Leak(0..n)} x {H, V}` plus the step counter.
///
/// The leak ladder grows by one mode per step, so after `n` steps it holds
/// exactly `Leak(0)..Leak(n-1)`; leaked amplitude never re-enters the cavities.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SystemState {
    pub(crate) left: Polarisation,
    pub(crate) right: Polarisation,
    /// `leaks[k]` is `Leak(k)`.
    pub(crate) leaks: VecDeque<Polarisation>,
    pub(crate) steps: usize,
}

/// Prepares `|L> (x) pol` at step 0. Rejects unnormalised polarisations.
pub fn make_initial(pol: Polarisation) -> Result<SystemState> {
    pol.validate_normalized()?;
    Ok(SystemState::on_left(pol))
}

impl SystemState {
    /// `|L> (x) pol` without the normalisation check; used for post-selection
    /// states, which are kept unnormalised.
    pub fn on_left(pol: Polarisation) -> Self {
        SystemState {
            left: pol,
            ..SystemState::default()
        }
    }

    pub fn on_right(pol: Polarisation) -> Self {
        SystemState {
            right: pol,
            ..SystemState::default()
        }
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn left(&self) -> Polarisation {
        self.left
    }

    pub fn right(&self) -> Polarisation {
        self.right
    }

    pub fn leak_count(&self) -> usize {
        self.leaks.len()
    }

    pub fn leaks(&self) -> impl Iterator<Item = &Polarisation> {
        self.leaks.iter()
    }

    pub fn mode(&self, mode: ModeIndex) -> Polarisation {
        match mode {
            ModeIndex::Left => self.left,
            ModeIndex::Right => self.right,
            ModeIndex::Leak(k) => self.leaks.get(k).copied().unwrap_or_default(),
        }
    }

    pub fn amplitude(&self, mode: ModeIndex, pol: Component) -> Complex64 {
        self.mode(mode).component(pol)
    }

    /// Every mode present in the state, in the order L, R, Leak(0), Leak(1), ...
    pub fn modes(&self) -> impl Iterator<Item = (ModeIndex, Polarisation)> + '_ {
        [(ModeIndex::Left, self.left), (ModeIndex::Right, self.right)]
            .into_iter()
            .chain(
                self.leaks
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (ModeIndex::Leak(k), *p)),
            )
    }

    pub fn norm_sqr(&self) -> f64 {
        self.modes().map(|(_, p)| p.norm_sqr()).sum()
    }

    /// Norm inside the two cavities (L and R).
    pub fn cavity_norm_sqr(&self) -> f64 {
        self.left.norm_sqr() + self.right.norm_sqr()
    }

    /// Probability of having leaked out through the right-hand wall.
    pub fn leak_probability(&self) -> f64 {
        self.leaks.iter().map(Polarisation::norm_sqr).sum()
    }

    /// `<self|other>` summed over all modes.
    pub fn inner(&self, other: &SystemState) -> Complex64 {
        let cavity = self.left.inner(&other.left) + self.right.inner(&other.right);
        let leaks: Complex64 = self
            .leaks
            .iter()
            .zip(other.leaks.iter())
            .map(|(a, b)| a.inner(b))
            .sum();
        cavity + leaks
    }

    /// Keeps only the given mode; everything else is zeroed.
    pub fn restricted_to(&self, mode: ModeIndex) -> SystemState {
        let mut out = SystemState {
            leaks: VecDeque::from(vec![Polarisation::ZERO; self.leaks.len()]),
            steps: self.steps,
            ..SystemState::default()
        };
        match mode {
            ModeIndex::Left => out.left = self.left,
            ModeIndex::Right => out.right = self.right,
            ModeIndex::Leak(k) => {
                if let Some(p) = self.leaks.get(k) {
                    out.leaks[k] = *p;
                }
            }
        }
        out
    }

    /// `alpha * self + beta * other`. The step counter is taken from `self`.
    pub fn superpose(&self, alpha: Complex64, other: &SystemState, beta: Complex64) -> SystemState {
        let n = self.leaks.len().max(other.leaks.len());
        let leaks = (0..n)
            .map(|k| {
                let a = self.leaks.get(k).copied().unwrap_or_default();
                let b = other.leaks.get(k).copied().unwrap_or_default();
                a * alpha + b * beta
            })
            .collect();
        SystemState {
            left: self.left * alpha + other.left * beta,
            right: self.right * alpha + other.right * beta,
            leaks,
            steps: self.steps,
        }
    }

    pub fn scaled(&self, k: Complex64) -> SystemState {
        SystemState {
            left: self.left * k,
            right: self.right * k,
            leaks: self.leaks.iter().map(|p| *p * k).collect(),
            steps: self.steps,
        }
    }

    /// Largest amplitude difference over all modes.
    pub fn max_abs_diff(&self, other: &SystemState) -> f64 {
        self.superpose(Complex64::new(1.0, 0.0), other, Complex64::new(-1.0, 0.0))
            .modes()
            .map(|(_, p)| p.h.norm().max(p.v.norm()))
            .fold(0.0, f64::max)
    }
}
