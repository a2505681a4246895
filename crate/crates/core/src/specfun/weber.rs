//! Parabolic-cylinder (Weber) function `U(a, z)`, the solution of
//! `u'' = (z²/4 + a) u` that decays like `e^{−z²/4} z^{−a−1/2}` for
//! `|arg z| < 3π/4`.
//!
//! Strategy:
//! * large `|z|` with `|arg z| < π/2`: the asymptotic series directly;
//! * `|arg z| ≤ π/4`: start from the asymptotic series at a larger radius on
//!   the same ray and integrate the ODE inwards (`U` is recessive there, so
//!   inward integration is stable);
//! * otherwise: start from the exact values `U(a, 0)`, `U'(a, 0)` and
//!   integrate outwards.
//!
//! The ODE is integrated with local Taylor expansions, whose coefficients
//! follow exactly from the polynomial coefficient `z²/4 + a`.

use core::f64::consts::{FRAC_PI_4, PI};

use super::gamma::rgamma;
use crate::{c, cr, ComplexArg, Error, Result};

const MAX_TAYLOR_TERMS: usize = 200;
const MIN_ASYMPTOTIC_RADIUS: f64 = 8.0;

/// `U(a, z)`.
pub fn weber_u(a: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    Ok(weber_u_with_derivative(a, z)?.0)
}

/// `(U(a, z), ∂U/∂z)`.
pub fn weber_u_with_derivative(a: ComplexArg, z: ComplexArg) -> Result<(ComplexArg, ComplexArg)> {
    crate::ensure_finite(a, "Weber parameter")?;
    crate::ensure_finite(z, "Weber argument")?;
    let r = z.norm();
    let theta = if r == 0.0 { 0.0 } else { z.arg() };
    if theta.abs() < 0.5 * PI {
        if let Some(v) = asymptotic(a, z) {
            return Ok(v);
        }
    }
    if theta.abs() <= FRAC_PI_4 + 1e-12 && r > 1.0 {
        let dir = c(theta.cos(), theta.sin());
        let mut radius = r.max(MIN_ASYMPTOTIC_RADIUS);
        for _ in 0..60 {
            if let Some(start) = asymptotic(a, dir * radius) {
                return integrate(a, dir * radius, start, z);
            }
            radius *= 1.25;
        }
        return Err(Error::BudgetExceeded { what: "Weber asymptotic series", terms: 60 });
    }
    integrate(a, cr(0.0), origin_values(a), z)
}

/// `U(a, 0) = √π / (2^{a/2+1/4} Γ(3/4 + a/2))`,
/// `U'(a, 0) = −√π / (2^{a/2−1/4} Γ(1/4 + a/2))`.
fn origin_values(a: ComplexArg) -> (ComplexArg, ComplexArg) {
    let sqrt_pi = PI.sqrt();
    let two = cr(2.0);
    let u0 = sqrt_pi * rgamma(a * 0.5 + 0.75) / two.powc(a * 0.5 + 0.25);
    let du0 = -sqrt_pi * rgamma(a * 0.5 + 0.25) / two.powc(a * 0.5 - 0.25);
    (u0, du0)
}

/// `U ~ e^{−z²/4} z^{−a−1/2} Σ_s (−1)^s (a+1/2)_{2s} / (s! (2z²)^s)`,
/// accepted only when the terms reach `1e−17` relative before growing.
fn asymptotic(a: ComplexArg, z: ComplexArg) -> Option<(ComplexArg, ComplexArg)> {
    if z.norm() < MIN_ASYMPTOTIC_RADIUS {
        return None;
    }
    let inv_2z2 = (2.0 * z * z).inv();
    let h = a + 0.5;
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    // Σ −2s c_s z^{−2s−1}, the derivative of the series in z.
    let mut dsum = cr(0.0);
    let mut prev = f64::INFINITY;
    let mut converged = false;
    for s in 0..400 {
        let sf = s as f64;
        term = -term * (h + 2.0 * sf) * (h + 2.0 * sf + 1.0) / (sf + 1.0) * inv_2z2;
        let size = term.norm();
        if size <= 1e-17 * sum.norm() {
            converged = true;
            break;
        }
        if size > prev {
            return None;
        }
        prev = size;
        sum += term;
        dsum += term * (-2.0 * (sf + 1.0)) / z;
    }
    if !converged {
        return None;
    }
    let pref = (-z * z * 0.25 - h * z.ln()).exp();
    let u = pref * sum;
    let du = pref * (dsum - (z * 0.5 + h / z) * sum);
    Some((u, du))
}

/// Carries `(u, u')` from `from` to `to` along the straight segment.
fn integrate(
    a: ComplexArg,
    from: ComplexArg,
    start: (ComplexArg, ComplexArg),
    to: ComplexArg,
) -> Result<(ComplexArg, ComplexArg)> {
    let (mut u, mut du) = start;
    let mut z0 = from;
    let span = to - from;
    let length = span.norm();
    if length == 0.0 {
        return Ok(start);
    }
    let dir = span / length;
    let mut travelled = 0.0;
    while travelled < length {
        let scale = 0.5 * z0.norm() + a.norm().sqrt() + 1.0;
        let step = (1.0 / scale).min(length - travelled);
        let (nu, ndu) = taylor_step(a, z0, u, du, dir * step)?;
        u = nu;
        du = ndu;
        travelled += step;
        z0 = if travelled >= length { to } else { from + dir * travelled };
    }
    Ok((u, du))
}

/// Taylor expansion of the solution about `z0`:
/// `(n+2)(n+1) c_{n+2} = p₀ c_n + p₁ c_{n−1} + p₂ c_{n−2}` with
/// `p₀ = z0²/4 + a`, `p₁ = z0/2`, `p₂ = 1/4`.
fn taylor_step(
    a: ComplexArg,
    z0: ComplexArg,
    u: ComplexArg,
    du: ComplexArg,
    h: ComplexArg,
) -> Result<(ComplexArg, ComplexArg)> {
    let p0 = z0 * z0 * 0.25 + a;
    let p1 = z0 * 0.5;
    let mut coeffs = [cr(0.0); MAX_TAYLOR_TERMS];
    coeffs[0] = u;
    coeffs[1] = du;
    let mut value = u + du * h;
    let mut deriv = du;
    let mut hp = h; // h^{n−1} for the derivative of term n
    let mut quiet = 0;
    for n in 0..MAX_TAYLOR_TERMS - 2 {
        let mut rhs = p0 * coeffs[n];
        if n >= 1 {
            rhs += p1 * coeffs[n - 1];
        }
        if n >= 2 {
            rhs += coeffs[n - 2] * 0.25;
        }
        let next = rhs / (((n + 2) * (n + 1)) as f64);
        coeffs[n + 2] = next;
        let dterm = next * hp * ((n + 2) as f64);
        hp *= h;
        let vterm = next * hp;
        value += vterm;
        deriv += dterm;
        if vterm.norm() <= 1e-17 * value.norm() && dterm.norm() <= 1e-17 * deriv.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok((value, deriv));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::BudgetExceeded { what: "Weber Taylor step", terms: MAX_TAYLOR_TERMS })
}
