//! Green's function for the acoustic half-space problem with impedance
//! boundary conditions, in dimension `d >= 1`, for complex frequency `s`
//! with `Re s >= 0`, `s != 0`.
//!
//! The half-space Green's function splits into a free-space part, a mirror
//! image and an impedance correction.  The correction is evaluated through a
//! non-oscillatory integral representation over `[0, inf)` whose integrand is
//! built from exponentially scaled modified Bessel functions, so that no
//! intermediate quantity over- or underflows.  Closed forms are used for
//! `d = 1` and for odd `d` with impedance parameter `beta = 1`.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature just forwards to the standard library math routines.
//!
//! Layout:
//!
//! - [`special`]: modified Bessel functions `K_lambda` of complex argument
//!   (integer and half-integer order, scaled and unscaled), the exponential
//!   integral `E1` and Tricomi's `U(1,1,z)`.
//! - [`geometry`]: half-space points, reflection, the difference vector and
//!   the monotone substitution `y(z, t)` with its inverse.
//! - [`quadrature`]: adaptive Gauss-Kronrod integration over `[0, inf)` with
//!   truncation control and an accelerated path for oscillatory tails.
//! - [`greens`]: the integral representations, closed-form fast paths and the
//!   assembled Green's function.
//! - [`verify`]: finite-difference residual checks of the governing equation,
//!   the boundary condition and the derivative identities.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod greens;
pub mod quadrature;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{DiffVector, HalfSpacePoint, ProblemParams};
pub use greens::{
    g_imp, g_imp_closed_d3_beta1, g_imp_closed_odd_beta1, g_imp_t_form, g_nu, green, green_1d,
    psi, psi_regularized, q_nu, EvalPath, Evaluation, Frequency, Regime,
};
pub use quadrature::{integrate_semi_infinite, truncation_point, QuadratureConfig, QuadratureResult};
pub use special::{bessel_k, bessel_k_scaled, exp_integral_e1, tricomi_u11, BesselOrder};
