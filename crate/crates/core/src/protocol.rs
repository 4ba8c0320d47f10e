//! The per-cycle unitary of the coupled-cavity apparatus.
//!
//! One step advances the system from `t_n = nT` to `t_{n+1}`. The partition
//! acts as a real rotation by `eps = pi/2N` on the (L, R) pair of each
//! polarisation, with the `-1` carried by the R -> L amplitude:
//!
//! ```text
//! L -> cos(eps) L + sin(eps) R
//! R -> cos(eps) R - sin(eps) L
//! ```
//!
//! The right-hand wall then either reflects the R component (V, mirror
//! present) or transmits it into a fresh `Leak(0)` mode while every older
//! leak moves one rung down the ladder.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarisation::{Component, Operator2, Polarisation};
use crate::state::SystemState;

/// One apparatus configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProtocolParams {
    half_cycles: u32,
    mirror_present: bool,
    steps: usize,
}

impl ProtocolParams {
    /// `half_cycles` is N; the protocol runs for 2N steps by default.
    pub fn new(half_cycles: u32, mirror_present: bool) -> Result<Self> {
        if half_cycles == 0 {
            return Err(Error::invalid("N", "must be a positive integer"));
        }
        Ok(ProtocolParams {
            half_cycles,
            mirror_present,
            steps: 2 * half_cycles as usize,
        })
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_mirror(mut self, mirror_present: bool) -> Self {
        self.mirror_present = mirror_present;
        self
    }

    pub fn half_cycles(&self) -> u32 {
        self.half_cycles
    }

    pub fn mirror_present(&self) -> bool {
        self.mirror_present
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Full protocol length, 2N.
    pub fn cycle_len(&self) -> usize {
        2 * self.half_cycles as usize
    }

    /// Partition mixing angle `pi / 2N`.
    pub fn epsilon(&self) -> f64 {
        epsilon(self.half_cycles)
    }

    /// Whether the right-hand wall reflects this polarisation.
    pub fn reflects(&self, pol: Component) -> bool {
        self.mirror_present && pol == Component::V
    }
}

pub fn epsilon(half_cycles: u32) -> f64 {
    PI / (2.0 * f64::from(half_cycles))
}

/// Advances the state by one cycle.
pub fn step(state: &SystemState, params: &ProtocolParams) -> SystemState {
    let mut next = state.clone();
    step_in_place(&mut next, params);
    next
}

/// In-place form of [`step`].
pub fn step_in_place(state: &mut SystemState, params: &ProtocolParams) {
    let (s, c) = params.epsilon().sin_cos();
    let mut leak = Polarisation::ZERO;
    for pol in [Component::H, Component::V] {
        let l = state.left.component(pol);
        let r = state.right.component(pol);
        let l_next = l * c - r * s;
        let r_next = l * s + r * c;
        *state.left.component_mut(pol) = l_next;
        if params.reflects(pol) {
            *state.right.component_mut(pol) = r_next;
        } else {
            *state.right.component_mut(pol) = Complex64::new(0.0, 0.0);
            *leak.component_mut(pol) = r_next;
        }
    }
    state.leaks.push_front(leak);
    state.steps += 1;
}

/// Applies `n` steps.
pub fn evolve(state: &SystemState, params: &ProtocolParams, n: usize) -> SystemState {
    let mut out = state.clone();
    out.leaks.reserve(n);
    for _ in 0..n {
        step_in_place(&mut out, params);
    }
    out
}

/// Runs the configured number of steps (`params.steps()`, 2N by default).
pub fn run(state: &SystemState, params: &ProtocolParams) -> SystemState {
    evolve(state, params, params.steps())
}

/// `cos^{2N}(pi/2N)`, the amplitude left on `(L, H)` after a full protocol.
pub fn survival_amplitude_closed_form(half_cycles: u32) -> f64 {
    epsilon(half_cycles).cos().powi(2 * half_cycles as i32)
}

/// Total probability in the leak ladder.
pub fn leak_probability(state: &SystemState) -> f64 {
    state.leak_probability()
}

/// The `L -> L` block of `U^n`, obtained by simulating the two basis inputs.
///
/// Neither the partition nor the wall mixes polarisations, so the result is
/// diagonal; it is still assembled as a full 2x2 operator.
pub fn left_transfer(params: &ProtocolParams, n: usize) -> Operator2 {
    let h = evolve(&SystemState::on_left(Polarisation::horizontal()), params, n).left();
    let v = evolve(&SystemState::on_left(Polarisation::vertical()), params, n).left();
    Operator2([[h.h, v.h], [h.v, v.v]])
}
