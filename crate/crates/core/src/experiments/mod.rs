//! Bench-level detection schemes.
//!
//! [`homodyne`] interferes the protocol output with a reference copy and shows
//! the outcome does not depend on the mirror. [`perturbation`] tilts the input
//! towards V and reads the imbalance between the D and A detectors;
//! [`montecarlo`] and [`scan`] turn that into finite-shot statistics.

pub mod homodyne;
pub mod montecarlo;
pub mod perturbation;
pub mod scan;

pub use homodyne::{homodyne_run, HomodyneResult};
pub use montecarlo::{monte_carlo, DetectionStats};
pub use perturbation::{perturbed_probabilities, ratio, MuPolicy, PerturbationParams};
pub use scan::{snr_scan, ScanRow};
