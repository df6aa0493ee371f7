//! Special-function kernel layer: modified Bessel functions `K_lambda` of
//! complex argument (integer and half-integer order), the exponential
//! integral `E1` and Tricomi's confluent hypergeometric `U(1,1,z)`.
//!
//! All functions accept arguments in the closed right half-plane
//! `|arg z| <= pi/2`, `z != 0`.  Exponentially scaled variants (`e^z K(z)`,
//! `e^z E1(z)`) are first-class citizens: the integral representations in
//! [`crate::greens`] mix growing and decaying exponentials that must cancel
//! analytically, and the scaled forms are how that cancellation is kept exact
//! in the exponent.

mod bessel;
mod expint;

pub use bessel::{bessel_k, bessel_k_scaled, BesselOrder};
pub use expint::{exp_integral_e1, exp_integral_e1_scaled, tricomi_u11};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Euler-Mascheroni constant.
pub(crate) const EULER_GAMMA: f64 = 0.577215664901532860606512090082402431_f64;

/// A nonzero complex argument in the closed right half-plane.
///
/// Arises as the product of the frequency `s` (with `Re s >= 0`) and a
/// positive length, so `|arg z| <= pi/2` always holds for admissible inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexArg(Complex64);

impl ComplexArg {
    /// Validates `z != 0` and `|arg z| <= pi/2` (equivalently `Re z >= 0`).
    pub fn new(z: Complex64) -> Result<Self> {
        if z.re == 0.0 && z.im == 0.0 {
            return Err(Error::domain("argument must be nonzero"));
        }
        if !(z.re >= 0.0) || !z.is_finite() {
            return Err(Error::domain(
                "argument must lie in the closed right half-plane",
            ));
        }
        Ok(ComplexArg(z))
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_arg_rejects_zero_and_left_half_plane() {
        assert!(ComplexArg::new(Complex64::new(0.0, 0.0)).is_err());
        assert!(ComplexArg::new(Complex64::new(-1e-3, 2.0)).is_err());
        assert!(ComplexArg::new(Complex64::new(0.0, -2.0)).is_ok());
        assert!(ComplexArg::new(Complex64::new(5.0, -5.0)).is_ok());
    }
}
