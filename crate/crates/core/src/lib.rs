//! Stroboscopic simulation of the dynamical quantum Cheshire cat apparatus.
//!
//! Two cavities share a partition with mixing angle `pi/2N`; the right-hand
//! wall transmits H and (optionally) reflects V. After 2N cycles V acquires a
//! sign of -1 while H is attenuated by `cos^{2N}(pi/2N)`, which flips sigma_x
//! on the left cavity. The crate evolves that system and analyses which
//! detection schemes can see the flip:
//!
//! - [`protocol`]: the per-cycle unitary over `{L, R, Leak(k)} x {H, V}`.
//! - [`weak`]: weak values, analytic and from simulated states.
//! - [`experiments`]: homodyne comparison, tilted-input polarimetry and a
//!   seeded Monte Carlo detector.
//! - [`pointer`]: a Gaussian transverse pointer coupled by a birefringent
//!   displacement.

pub mod error;
pub mod experiments;
pub mod pointer;
pub mod polarisation;
pub mod protocol;
pub mod state;
pub mod weak;

pub use error::{Error, Result};
pub use polarisation::{Basis, Component, Operator2, Polarisation};
pub use protocol::{
    evolve, leak_probability, step, survival_amplitude_closed_form, ProtocolParams,
};
pub use state::{make_initial, ModeIndex, SystemState};
pub use weak::{weak_value, Observable, PostSelection};
