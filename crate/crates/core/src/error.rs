use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polarisation amplitudes are not normalised (|h|^2 + |v|^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Pre- and post-selection are (numerically) orthogonal.
    #[error("weak value undefined: |<f|i>| = {} below floor (numerator {numerator})", denominator.norm())]
    UndefinedWeakValue {
        numerator: Complex64,
        denominator: Complex64,
    },

    #[error("weak value diverges at beta = pi/2")]
    Divergent,

    #[error("ratio undefined: both detection weights are zero")]
    UndefinedRatio,

    #[error("intensity integrates to zero; centroid undefined")]
    ZeroIntensity,

    #[error("sampling grid half-width {half_width} does not cover the required {required}")]
    GridTooSmall { half_width: f64, required: f64 },
}

impl Error {
    pub fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for the errors that signal a mathematically undefined quantity
    /// (zero overlap, zero intensity, divergence) rather than bad input.
    pub fn is_undefined_value(&self) -> bool {
        matches!(
            self,
            Error::UndefinedWeakValue { .. }
                | Error::Divergent
                | Error::UndefinedRatio
                | Error::ZeroIntensity
        )
    }
}
