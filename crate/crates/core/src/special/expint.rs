//! Exponential integral `E1(z)` and Tricomi's `U(1,1,z) = e^z E1(z)` for
//! complex `z` in the closed right half-plane.
//!
//! Ascending series for `|z| <= 3.5`, modified-Lentz continued fraction
//! beyond.  The continued fraction evaluates the scaled form directly, so
//! `U(1,1,z)` never over- or underflows however large `Re z` gets.

use super::{ComplexArg, EULER_GAMMA};
use crate::error::Result;
use num_complex::Complex64;
use num_traits::Float;

/// Series/continued-fraction crossover.  The alternating series loses about
/// `|z| / ln 10` digits to cancellation on the positive real axis; 3.5 keeps
/// that under one decimal digit, and the continued fraction is already at
/// machine accuracy there.
const SERIES_CUTOFF: f64 = 3.5;

/// Principal-branch exponential integral `E1(z)`.
///
/// May underflow to zero for large `Re z`; use [`tricomi_u11`] when the
/// `e^{-z}` decay is cancelled elsewhere.
pub fn exp_integral_e1(z: Complex64) -> Result<Complex64> {
    let a = ComplexArg::new(z)?;
    Ok(if z.norm() <= SERIES_CUTOFF {
        e1_series(a.value())
    } else {
        (-z).exp() * e1_continued_fraction_scaled(a.value())
    })
}

/// Scaled exponential integral `e^z E1(z)`, i.e. `U(1,1,z)`.
pub fn exp_integral_e1_scaled(z: Complex64) -> Result<Complex64> {
    let a = ComplexArg::new(z)?;
    Ok(if z.norm() <= SERIES_CUTOFF {
        z.exp() * e1_series(a.value())
    } else {
        e1_continued_fraction_scaled(a.value())
    })
}

/// Tricomi's confluent hypergeometric function `U(1,1,z) = e^z E1(z)`.
pub fn tricomi_u11(z: Complex64) -> Result<Complex64> {
    exp_integral_e1_scaled(z)
}

/// `E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)`.
fn e1_series(z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0); // (-z)^k / k!
    for k in 1..=80u32 {
        term *= -z / k as f64;
        let contrib = -term / k as f64;
        sum += contrib;
        if contrib.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    -EULER_GAMMA - z.ln() + sum
}

/// `e^z E1(z) = 1/(z+1-) 1^2/(z+3-) 2^2/(z+5-) ...` by modified Lentz.
fn e1_continued_fraction_scaled(z: Complex64) -> Complex64 {
    const MAX_ITER: usize = 5000;
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        if c.re == 0.0 && c.im == 0.0 {
            c = Complex64::new(TINY, 0.0);
        }
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm() < f64::EPSILON {
            break;
        }
    }
    h
}
