//! Green functions of exemplar Schrödinger operators and their on-diagonal
//! renormalization.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`specfun`]: complex Gamma, digamma, Bessel `K`, Kummer/Tricomi and
//!   Whittaker functions with `c = 2`, Hurwitz zeta at `s = 1/2` and the
//!   parabolic-cylinder function `U(a, z)`.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration on finite intervals
//!   and on the half-line, with endpoint hints.
//! * [`models`]: free resolvents in dimensions 1–4, the Coulomb Green
//!   function, the three-dimensional Landau Hamiltonian and the inverted
//!   oscillator.
//! * [`renorm`]: standard singularities, near-diagonal extrapolation of
//!   `G - S`, least-squares singularity fits and spectral-parameter probes.
//! * [`krein`]: Q-matrices, the Krein resolvent formula and bound states of
//!   finite point interactions.
//!
//! Units are the natural ones, `ħ = 2m = 1`; the spectral parameter is
//! written `ζ` and `κ = √(−ζ)` always denotes the principal root.

#![no_std]
#![cfg_attr(test, allow(unused_imports))]
// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod krein;
pub mod linalg;
pub mod models;
pub mod quadrature;
pub mod renorm;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex argument or value used throughout the crate.
pub type ComplexArg = Complex64;

/// Euler's constant `C_E`.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(crate) fn c(re: f64, im: f64) -> ComplexArg {
    ComplexArg::new(re, im)
}

pub(crate) fn cr(re: f64) -> ComplexArg {
    ComplexArg::new(re, 0.0)
}

/// Rejects NaN or infinite components.
pub fn ensure_finite(z: ComplexArg, what: &'static str) -> Result<ComplexArg> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain(alloc::format!("{what} must be finite, got {z}")))
    }
}
