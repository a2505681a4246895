//! Special functions required by the Green-function formulas.
//!
//! Everything is evaluated in `f64` complex arithmetic. The confluent
//! functions are restricted to the second parameter `c = 2` (`μ = 1/2` for the
//! Whittaker pair) and the Hurwitz zeta function to `s = 1/2`; those are the
//! only cases the models need.

mod bessel;
mod confluent;
mod gamma;
mod hurwitz;
mod weber;

pub use bessel::{bessel_k, BesselOrder};
pub use confluent::{
    kummer_phi, kummer_phi_with, tricomi_psi, tricomi_psi_with, whittaker_m, whittaker_m_prime, whittaker_m_with,
    whittaker_w, whittaker_w_prime, whittaker_w_with, TricomiExpansion,
};
pub use gamma::{digamma, gamma, ln_gamma, rgamma};
pub use hurwitz::hurwitz_zeta_half;
pub use weber::{weber_u, weber_u_with_derivative};

use crate::{Error, Result};

/// Distance below which an argument counts as sitting on a Gamma pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Term and tolerance limits for series evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesBudget {
    pub max_terms: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl Default for SeriesBudget {
    fn default() -> Self {
        Self { max_terms: 2000, rel_tol: 1e-16, abs_tol: 1e-300 }
    }
}

impl SeriesBudget {
    pub fn new(max_terms: usize, rel_tol: f64, abs_tol: f64) -> Result<Self> {
        let b = Self { max_terms, rel_tol, abs_tol };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        let in_unit = |x: f64| x > 0.0 && x < 1.0;
        if self.max_terms < 8 || !in_unit(self.rel_tol) || !in_unit(self.abs_tol) {
            return Err(Error::domain(alloc::format!(
                "invalid series budget {self:?}: need max_terms >= 8 and tolerances in (0, 1)"
            )));
        }
        Ok(())
    }
}

/// Nearest nonpositive integer to `z` when `z` lies within [`POLE_TOLERANCE`].
pub(crate) fn nonpositive_integer(z: crate::ComplexArg) -> Option<i64> {
    if z.im.abs() > POLE_TOLERANCE {
        return None;
    }
    let n = z.re.round();
    if n <= 0.0 && (z.re - n).abs() <= POLE_TOLERANCE {
        Some(n as i64)
    } else {
        None
    }
}
