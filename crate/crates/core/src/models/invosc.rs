use core::f64::consts::{FRAC_PI_4, PI};

use super::{EvalResult, Method, SpectralPoint};
use crate::specfun::{gamma, weber_u};
use crate::{ComplexArg, Error, Result};

/// Kernel of `(−d²/dx² − ω²x²/4 − ζ)⁻¹` for `Im ζ > 0`:
///
/// `G = e^{iπ/4} Γ(1/2 + a)/√(2πω) · U(a, c·max(x, y)) · U(a, −c·min(x, y))`
/// with `a = −iζ/ω` and `c = e^{−iπ/4}√ω`.
pub fn green_invosc(x: f64, y: f64, s: &SpectralPoint, omega: f64) -> Result<EvalResult> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::domain("oscillator frequency must be positive"));
    }
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::domain("coordinates must be finite"));
    }
    let zeta = s.zeta();
    if !(zeta.im > 0.0) {
        return Err(Error::domain(alloc::format!("the inverted oscillator kernel needs Im ζ > 0, got ζ = {zeta}")));
    }
    let a = ComplexArg::new(0.0, -1.0) * zeta / omega;
    let c = ComplexArg::from_polar(omega.sqrt(), -FRAC_PI_4);
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    let pre = ComplexArg::from_polar(1.0, FRAC_PI_4) * gamma(0.5 + a)? / (2.0 * PI * omega).sqrt();
    let value = pre * weber_u(a, c * hi)? * weber_u(a, -c * lo)?;
    let value = crate::ensure_finite(value, "inverted oscillator Green function")?;
    Ok(EvalResult { value, abs_error: 1e-13 * value.norm(), method: Method::Series })
}
