//! Three-dimensional Landau Hamiltonian with a uniform field along the third
//! axis, in the symmetric gauge.
//!
//! With `A = π|ξ|`, `c = 1/2 − ζ/(4π|ξ|)`, `ρ = |x_⊥|` and `z = x_∥` the kernel is
//! `G(x, y; ζ) = Φ(x, y) F(x − y; ζ)` where `Φ` is the gauge phase and
//!
//! `F(x) = √|ξ|/(4π) ∫₀^∞ exp[−A(ρ²/(eᵗ − 1) + z²/t)] / ((1 − e^{−t}) e^{ct} √t) dt`.
//!
//! The prefactor is included in [`landau_f`], so that `F` carries the full
//! `1/(4π|x|)` singularity.

use core::f64::consts::PI;

use super::{EvalResult, Method, Point, SpectralPoint};
use crate::quadrature::{integrate_halfline, EndpointHints, QuadratureConfig};
use crate::specfun::hurwitz_zeta_half;
use crate::{ComplexArg, Error, Result};

/// Bottom of the spectrum, `2π|ξ|`.
pub fn landau_spectrum_threshold(xi: f64) -> f64 {
    2.0 * PI * xi.abs()
}

/// `exp(iπξ(x₁y₂ − x₂y₁))`.
pub fn landau_phase(x: &Point, y: &Point, xi: f64) -> ComplexArg {
    let (x, y) = (x.coords(), y.coords());
    let wedge = match (x.len(), y.len()) {
        (a, b) if a >= 2 && b >= 2 => x[0] * y[1] - x[1] * y[0],
        _ => 0.0,
    };
    ComplexArg::from_polar(1.0, PI * xi * wedge)
}

struct Params {
    root_xi: f64,
    a: f64,
    c: ComplexArg,
}

fn params(s: &SpectralPoint, xi: f64) -> Result<Params> {
    if !(xi.is_finite() && xi != 0.0) {
        return Err(Error::domain("flux density must be finite and non-zero"));
    }
    let threshold = landau_spectrum_threshold(xi);
    if !(s.zeta().re < threshold) {
        return Err(Error::domain(alloc::format!("Re ζ = {} must lie below 2π|ξ| = {threshold}", s.zeta().re)));
    }
    let xa = xi.abs();
    Ok(Params { root_xi: xa.sqrt(), a: PI * xa, c: 0.5 - s.zeta() / (4.0 * PI * xa) })
}

/// `1/(eᵗ − 1) − 1/t`, bounded on `[0, ∞)` with value `−1/2` at the origin.
fn h(t: f64) -> f64 {
    if t < 0.05 {
        let t2 = t * t;
        -0.5 + t / 12.0 * (1.0 - t2 / 60.0 * (1.0 - t2 / 42.0))
    } else {
        1.0 / t.exp_m1() - 1.0 / t
    }
}

/// Integrand of the defining representation on the axis, i.e. with `ρ = 0`
/// and `z` replaced by `|x|`.
fn axis_kernel(p: &Params, r2: f64, t: f64) -> ComplexArg {
    let damp = (-p.a * r2 / t).exp();
    if damp == 0.0 {
        return ComplexArg::new(0.0, 0.0);
    }
    (-p.c * t).exp() * (damp / (-(-t).exp_m1() * t.sqrt()))
}

/// `G` on the field axis, `x = (0, 0, z)`.
///
/// Computed as `f₁ + f₂`, where `f₁ = exp(−√(2π|ξ| − ζ)|z|)/(4π|z|)` is the
/// closed-form part and
/// `f₂ = √|ξ|/(2π) ∫₀^∞ (1/(1 − e^{−t²}) − 1/t²) exp(−Az²/t² − ct²) dt`
/// has a bounded integrand.
pub fn landau_f_axis(z: f64, s: &SpectralPoint, xi: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let p = params(s, xi)?;
    let z = z.abs();
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::domain(alloc::format!("axis distance must be non-zero, got {z}")));
    }
    let beta = 2.0 * (p.a * p.c).sqrt();
    let f1 = (-beta * z).exp() / (4.0 * PI * z);
    let az2 = p.a * z * z;
    let quad = integrate_halfline(
        |t| {
            let t2 = t * t;
            let damp = (-az2 / t2).exp();
            if damp == 0.0 {
                return ComplexArg::new(0.0, 0.0);
            }
            (-p.c * t2).exp() * ((1.0 + h(t2)) * damp)
        },
        cfg,
        EndpointHints::default(),
    )?;
    let pre = p.root_xi / (2.0 * PI);
    let value = crate::ensure_finite(f1 + pre * quad.value, "Landau axis kernel")?;
    Ok(EvalResult { value, abs_error: pre * quad.abs_error_estimate + 1e-15 * f1.norm(), method: Method::Quadrature })
}

/// Direct quadrature of the defining integral, for any `dx ≠ 0`.
pub fn landau_f_direct(dx: &Point, s: &SpectralPoint, xi: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    dx.require_dim(3)?;
    let p = params(s, xi)?;
    let v = dx.coords();
    let rho2 = v[0] * v[0] + v[1] * v[1];
    let z2 = v[2] * v[2];
    if rho2 + z2 == 0.0 {
        return Err(Error::domain("the Landau kernel is singular at x = y"));
    }
    let quad = integrate_halfline(
        |t| {
            let damp = (-p.a * (rho2 / t.exp_m1() + z2 / t)).exp();
            if damp == 0.0 {
                return ComplexArg::new(0.0, 0.0);
            }
            (-p.c * t).exp() * (damp / (-(-t).exp_m1() * t.sqrt()))
        },
        cfg,
        EndpointHints::essential_zero(p.a * (rho2 + z2)),
    )?;
    let pre = p.root_xi / (4.0 * PI);
    let value = crate::ensure_finite(pre * quad.value, "Landau kernel")?;
    Ok(EvalResult { value, abs_error: pre * quad.abs_error_estimate, method: Method::Quadrature })
}

/// Gauge-invariant part `F(x − y)` of the Landau kernel.
///
/// On the field axis this is [`landau_f_axis`]. Near the diagonal the
/// transverse factor is split as `1/(eᵗ − 1) = 1/t + h(t)` with bounded `h`:
/// the `1/t` part turns the integral into the axis kernel at distance `|x|`
/// and the remainder `exp(−Aρ²h) − 1` is small and smooth. Far from the
/// diagonal the defining integral is used directly.
pub fn landau_f(dx: &Point, s: &SpectralPoint, xi: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    dx.require_dim(3)?;
    let p = params(s, xi)?;
    let v = dx.coords();
    let rho2 = v[0] * v[0] + v[1] * v[1];
    let r = dx.norm();
    if r == 0.0 {
        return Err(Error::domain("the Landau kernel is singular at x = y"));
    }
    if rho2 == 0.0 {
        return landau_f_axis(r, s, xi, cfg);
    }
    if r >= 1.0 {
        return landau_f_direct(dx, s, xi, cfg);
    }
    let axis = landau_f_axis(r, s, xi, cfg)?;
    let r2 = r * r;
    let rest = integrate_halfline(
        |t| axis_kernel(&p, r2, t) * (-p.a * rho2 * h(t)).exp_m1(),
        cfg,
        EndpointHints::essential_zero(p.a * r2),
    )?;
    let pre = p.root_xi / (4.0 * PI);
    let value = crate::ensure_finite(axis.value + pre * rest.value, "Landau kernel")?;
    Ok(EvalResult { value, abs_error: axis.abs_error + pre * rest.abs_error_estimate, method: Method::Quadrature })
}

/// `G(x, y; ζ) = landau_phase(x, y) · F(x − y)`.
pub fn green_landau(x: &Point, y: &Point, s: &SpectralPoint, xi: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    x.require_dim(3)?;
    y.require_dim(3)?;
    let f = landau_f(&x.sub(y)?, s, xi, cfg)?;
    Ok(EvalResult { value: landau_phase(x, y, xi) * f.value, ..f })
}

/// Renormalized diagonal `lim (G(x, y) − Φ(x, y)/(4π|x − y|))`, equal to
/// `¼√(|ξ|/π) Z(1/2, c)`.
pub fn landau_q(s: &SpectralPoint, xi: f64) -> Result<ComplexArg> {
    let p = params(s, xi)?;
    Ok(0.25 * (xi.abs() / PI).sqrt() * hurwitz_zeta_half(p.c)?)
}
