//! Two-component polarisation amplitudes and 2x2 operators.
//!
//! Amplitudes are stored in the rectilinear basis (H, V). The diagonal basis
//! is D = (H + V)/sqrt(2), A = (H - V)/sqrt(2); the change of basis is the
//! real Hadamard matrix, which is its own inverse.

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Tolerance for accepting a polarisation as normalised.
pub const NORM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Component {
    H,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// {H, V}
    Rectilinear,
    /// {D, A}
    Diagonal,
}

/// Maps an amplitude pair between the rectilinear and diagonal bases.
///
/// `(x, y) -> ((x + y)/sqrt(2), (x - y)/sqrt(2))`. Applying it twice is the identity.
pub fn change_basis(pair: [Complex64; 2]) -> [Complex64; 2] {
    [
        (pair[0] + pair[1]) * FRAC_1_SQRT_2,
        (pair[0] - pair[1]) * FRAC_1_SQRT_2,
    ]
}

/// A (not necessarily normalised) polarisation vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Polarisation {
    pub h: Complex64,
    pub v: Complex64,
}

impl Polarisation {
    pub const ZERO: Polarisation = Polarisation { h: ZERO, v: ZERO };

    pub fn new(h: Complex64, v: Complex64) -> Self {
        Polarisation { h, v }
    }

    pub fn real(h: f64, v: f64) -> Self {
        Polarisation::new(Complex64::new(h, 0.0), Complex64::new(v, 0.0))
    }

    /// Builds a polarisation from amplitudes in the given basis.
    pub fn in_basis(basis: Basis, first: Complex64, second: Complex64) -> Self {
        match basis {
            Basis::Rectilinear => Polarisation::new(first, second),
            Basis::Diagonal => {
                let [h, v] = change_basis([first, second]);
                Polarisation::new(h, v)
            }
        }
    }

    pub fn horizontal() -> Self {
        Polarisation::new(ONE, ZERO)
    }

    pub fn vertical() -> Self {
        Polarisation::new(ZERO, ONE)
    }

    pub fn diagonal() -> Self {
        Polarisation::real(FRAC_1_SQRT_2, FRAC_1_SQRT_2)
    }

    pub fn antidiagonal() -> Self {
        Polarisation::real(FRAC_1_SQRT_2, -FRAC_1_SQRT_2)
    }

    /// `cos(delta) H + sin(delta) V`: H tilted towards V by `delta`.
    pub fn tilted(delta: f64) -> Self {
        Polarisation::real(delta.cos(), delta.sin())
    }

    /// `cos(angle) D + sin(angle) A`.
    pub fn diagonal_angle(angle: f64) -> Self {
        Polarisation::in_basis(
            Basis::Diagonal,
            Complex64::new(angle.cos(), 0.0),
            Complex64::new(angle.sin(), 0.0),
        )
    }

    pub fn component(&self, c: Component) -> Complex64 {
        match c {
            Component::H => self.h,
            Component::V => self.v,
        }
    }

    pub fn component_mut(&mut self, c: Component) -> &mut Complex64 {
        match c {
            Component::H => &mut self.h,
            Component::V => &mut self.v,
        }
    }

    /// Amplitudes in the requested basis.
    pub fn amplitudes(&self, basis: Basis) -> [Complex64; 2] {
        match basis {
            Basis::Rectilinear => [self.h, self.v],
            Basis::Diagonal => change_basis([self.h, self.v]),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.h.norm_sqr() + self.v.norm_sqr()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn validate_normalized(&self) -> Result<()> {
        if self.is_normalized(NORM_TOLERANCE) {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                norm_sqr: self.norm_sqr(),
            })
        }
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Polarisation) -> Complex64 {
        self.h.conj() * other.h + self.v.conj() * other.v
    }

    pub fn scale(&self, k: Complex64) -> Polarisation {
        Polarisation::new(self.h * k, self.v * k)
    }

    pub fn is_zero(&self) -> bool {
        self.h == ZERO && self.v == ZERO
    }
}

impl Add for Polarisation {
    type Output = Polarisation;
    fn add(self, rhs: Polarisation) -> Polarisation {
        Polarisation::new(self.h + rhs.h, self.v + rhs.v)
    }
}

impl Sub for Polarisation {
    type Output = Polarisation;
    fn sub(self, rhs: Polarisation) -> Polarisation {
        Polarisation::new(self.h - rhs.h, self.v - rhs.v)
    }
}

impl Mul<Complex64> for Polarisation {
    type Output = Polarisation;
    fn mul(self, k: Complex64) -> Polarisation {
        self.scale(k)
    }
}

/// A 2x2 complex operator on polarisation, in the (H, V) basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Operator2(pub [[Complex64; 2]; 2]);

impl Operator2 {
    pub fn identity() -> Self {
        Operator2([[ONE, ZERO], [ZERO, ONE]])
    }

    /// `|D><D| - |A><A|`, which is the H/V swap.
    pub fn sigma_x() -> Self {
        Operator2([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn sigma_z() -> Self {
        Operator2([[ONE, ZERO], [ZERO, -ONE]])
    }

    /// `|p><p|` for a (normalised) polarisation `p`.
    pub fn projector(p: &Polarisation) -> Self {
        let k = [p.h, p.v];
        let mut m = [[ZERO; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = k[i] * k[j].conj();
            }
        }
        Operator2(m)
    }

    pub fn diagonal(h: Complex64, v: Complex64) -> Self {
        Operator2([[h, ZERO], [ZERO, v]])
    }

    pub fn apply(&self, p: &Polarisation) -> Polarisation {
        let m = &self.0;
        Polarisation::new(m[0][0] * p.h + m[0][1] * p.v, m[1][0] * p.h + m[1][1] * p.v)
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Operator2([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn compose(&self, rhs: &Operator2) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let mut m = [[ZERO; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Operator2(m)
    }

    /// Largest entrywise distance between two operators.
    pub fn max_abs_diff(&self, other: &Operator2) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut m = self.0;
        m.iter_mut().flatten().for_each(|x| *x *= k);
        Operator2(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn named_states() {
        let d = Polarisation::diagonal();
        let [dd, da] = d.amplitudes(Basis::Diagonal);
        assert!((dd - ONE).norm() < 1e-15);
        assert!(da.norm() < 1e-15);

        let a = Polarisation::antidiagonal();
        let [ad, aa] = a.amplitudes(Basis::Diagonal);
        assert!(ad.norm() < 1e-15);
        assert!((aa - ONE).norm() < 1e-15);

        let h = Polarisation::diagonal_angle(std::f64::consts::FRAC_PI_4);
        assert!((h.h - ONE).norm() < 1e-15 && h.v.norm() < 1e-15);
    }

    #[test]
    fn validate_rejects_unnormalised() {
        assert!(Polarisation::real(0.6, 0.8).validate_normalized().is_ok());
        assert!(Polarisation::new(c(0.6, 0.0), c(0.0, 0.8))
            .validate_normalized()
            .is_ok());
        let err = Polarisation::real(1.0, 1.0)
            .validate_normalized()
            .unwrap_err();
        assert!(matches!(err, Error::NotNormalized { norm_sqr } if (norm_sqr - 2.0).abs() < 1e-15));
    }

    #[test]
    fn sigma_x_is_d_minus_a() {
        let pd = Operator2::projector(&Polarisation::diagonal());
        let pa = Operator2::projector(&Polarisation::antidiagonal());
        let mut diff = pd;
        for i in 0..2 {
            for j in 0..2 {
                diff.0[i][j] -= pa.0[i][j];
            }
        }
        assert!(diff.max_abs_diff(&Operator2::sigma_x()) < 1e-15);
        assert!(Operator2::sigma_x().is_hermitian(1e-12));
        assert!(
            Operator2::sigma_x()
                .compose(&Operator2::sigma_x())
                .max_abs_diff(&Operator2::identity())
                < 1e-15
        );
    }

    proptest! {
        #[test]
        fn basis_change_is_an_isometric_involution(
            hr in -1.0f64..1.0, hi in -1.0f64..1.0, vr in -1.0f64..1.0, vi in -1.0f64..1.0,
        ) {
            let p = [c(hr, hi), c(vr, vi)];
            let once = change_basis(p);
            let twice = change_basis(once);
            prop_assert!((twice[0] - p[0]).norm() < 1e-12);
            prop_assert!((twice[1] - p[1]).norm() < 1e-12);
            let n0 = p[0].norm_sqr() + p[1].norm_sqr();
            let n1 = once[0].norm_sqr() + once[1].norm_sqr();
            prop_assert!((n0 - n1).abs() < 1e-12);
        }
    }
}
