use core::f64::consts::PI;

use super::{EvalResult, Method, Point, SpectralPoint};
use crate::specfun::{digamma, gamma, nonpositive_integer, whittaker_m_with, whittaker_w_with, SeriesBudget};
use crate::{ComplexArg, Error, Result, EULER_GAMMA};

/// Kernel of `(−Δ + q/|x| − ζ)⁻¹` in three dimensions (Hostler's closed form).
///
/// With `k = √(−ζ)`, `ν = −q/(2k)`, `ξ = |x| + |y| + |x − y|` and
/// `η = |x| + |y| − |x − y|`:
///
/// `G = Γ(1 − ν)/(4π|x − y|) · [W_{ν,1/2}(kξ) M'_{ν,1/2}(kη) − W'_{ν,1/2}(kξ) M_{ν,1/2}(kη)]`.
pub fn green_coulomb(x: &Point, y: &Point, s: &SpectralPoint, q: f64) -> Result<EvalResult> {
    x.require_dim(3)?;
    y.require_dim(3)?;
    if !q.is_finite() {
        return Err(Error::domain("Coulomb coupling must be finite"));
    }
    if s.on_nonnegative_axis() {
        return Err(Error::domain(alloc::format!("ζ = {} lies on the continuous spectrum [0, ∞)", s.zeta())));
    }
    let r = x.distance(y)?;
    if r == 0.0 {
        return Err(Error::domain("the Coulomb kernel is singular at x = y"));
    }
    let k = s.kappa();
    let nu = -q / (2.0 * k);
    let a = 1.0 - nu;
    if nonpositive_integer(a).is_some() {
        // ζ is a hydrogen-like bound state energy.
        return Err(Error::pole("Coulomb Green function", s.zeta()));
    }
    let (nx, ny) = (x.norm(), y.norm());
    let xi = nx + ny + r;
    let eta = (nx + ny - r).max(0.0);
    let budget = SeriesBudget::default();
    let (w, dw) = whittaker_w_with(nu, k * xi, &budget)?;
    let (m, dm) = whittaker_m_with(nu, k * eta, &budget)?;
    let pre = gamma(a)? / (4.0 * PI * r);
    let value = crate::ensure_finite(pre * (w * dm - dw * m), "Coulomb Green function")?;
    let scale = pre.norm() * ((w * dm).norm() + (dw * m).norm());
    Ok(EvalResult { value, abs_error: 1e-14 * scale.max(value.norm()), method: Method::Series })
}

/// Constant term of the expansion
/// `G(x, 0; ζ) = 1/(4π|x|) + (q/4π) log|x| + C + O(|x| log|x|)`, namely
/// `C = −k/(4π) + (q/4π)(ψ(1 + q/(2k)) + log k + log(2/e) + 2γ)`.
pub fn coulomb_diag_const(s: &SpectralPoint, q: f64) -> Result<ComplexArg> {
    if !q.is_finite() {
        return Err(Error::domain("Coulomb coupling must be finite"));
    }
    if s.on_nonnegative_axis() {
        return Err(Error::domain(alloc::format!("ζ = {} lies on the continuous spectrum [0, ∞)", s.zeta())));
    }
    let k = s.kappa();
    let free = -k / (4.0 * PI);
    if q == 0.0 {
        return Ok(free);
    }
    let psi = digamma(1.0 + q / (2.0 * k)).map_err(|e| match e {
        Error::Pole { .. } => Error::pole("Coulomb diagonal constant", s.zeta()),
        other => other,
    })?;
    Ok(free + q / (4.0 * PI) * (psi + k.ln() + 2.0f64.ln() - 1.0 + 2.0 * EULER_GAMMA))
}
