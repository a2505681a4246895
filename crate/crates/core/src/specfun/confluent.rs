//! Kummer `Φ(a, 2; z)`, Tricomi `Ψ(a, 2; z)` and the Whittaker pair
//! `M_{κ,1/2}`, `W_{κ,1/2}` with `a = 1 − κ`.
//!
//! Whittaker functions follow the standard normalisation
//! `M_{κ,1/2}(z) = e^{−z/2} z Φ(1−κ, 2; z)` and
//! `W_{κ,1/2}(z) = e^{−z/2} z Ψ(1−κ, 2; z)`.
//!
//! `Ψ` is evaluated by
//! * the logarithmic expansion for `|z| ≤ 2`,
//! * the asymptotic series when it reaches machine precision (large `|z|`),
//! * otherwise the Laplace integral
//!   `Ψ(a, b; z) = Γ(a)⁻¹ ∫₀^∞ e^{−zt} t^{a−1} (1+t)^{b−a−1} dt`,
//!   taken at `a + n` and `a + n + 1` with `Re(a + n) ≥ 1` and carried back
//!   down by the three-term recurrence in `a` (stable for `Ψ`, which is the
//!   minimal solution as `a → +∞`).

use super::gamma::{digamma, rgamma};
use super::{nonpositive_integer, SeriesBudget};
use crate::quadrature::{integrate_halfline, EndpointHints, QuadratureConfig};
use crate::{cr, ComplexArg, Error, Result, EULER_GAMMA};

/// Below this modulus `Ψ` is summed from its logarithmic expansion.
const LOG_SERIES_RADIUS: f64 = 2.0;
/// Smallest modulus at which the asymptotic series is attempted.
const ASYMPTOTIC_RADIUS: f64 = 20.0;

/// Kummer's function `M(a, b; z)` by its Taylor series.
pub(crate) fn kummer_m(a: ComplexArg, b: f64, z: ComplexArg, budget: &SeriesBudget) -> Result<ComplexArg> {
    if z.re < 0.0 {
        // Kummer's transformation keeps the terms of one sign for real data.
        return Ok(z.exp() * kummer_m(cr(b) - a, b, -z, budget)?);
    }
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..budget.max_terms {
        let kf = k as f64;
        term = term * (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term == cr(0.0) {
            return Ok(sum);
        }
        let next_ratio = ((a + kf + 1.0) * z / ((b + kf + 1.0) * (kf + 2.0))).norm();
        if term.norm() <= budget.rel_tol * sum.norm() + budget.abs_tol && next_ratio < 1.0 {
            return Ok(sum);
        }
    }
    Err(Error::BudgetExceeded { what: "Kummer series", terms: budget.max_terms })
}

/// `Φ(a, 2; z)`.
pub fn kummer_phi(a: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    kummer_phi_with(a, z, &SeriesBudget::default())
}

pub fn kummer_phi_with(a: ComplexArg, z: ComplexArg, budget: &SeriesBudget) -> Result<ComplexArg> {
    budget.validate()?;
    crate::ensure_finite(a, "Kummer parameter")?;
    crate::ensure_finite(z, "Kummer argument")?;
    kummer_m(a, 2.0, z, budget)
}

/// Pieces of the logarithmic expansion: `Ψ = sing/z + reg` and
/// `z Ψ' = −sing/z + zdreg`, with `sing = 1/Γ(a)`.
struct LogExpansion {
    sing: ComplexArg,
    reg: ComplexArg,
    zdreg: ComplexArg,
}

fn log_expansion(a: ComplexArg, z: ComplexArg, budget: &SeriesBudget) -> Result<LogExpansion> {
    let sing = rgamma(a);
    let ra1 = rgamma(a - 1.0);
    if ra1 == cr(0.0) {
        return Ok(LogExpansion { sing, reg: cr(0.0), zdreg: cr(0.0) });
    }
    let log_z = z.ln();
    let mut psi_a = digamma(a)?;
    let mut psi1 = -EULER_GAMMA;
    let mut psi2 = 1.0 - EULER_GAMMA;
    let mut p = cr(1.0);
    let mut reg = cr(0.0);
    let mut zdreg = cr(0.0);
    for k in 0..budget.max_terms {
        let kf = k as f64;
        let bracket = log_z + psi_a - psi1 - psi2;
        let t = p * bracket;
        reg += t;
        zdreg += t * kf + p;
        if k > 1
            && (p.norm() * (bracket.norm() * (kf + 1.0) + 1.0))
                <= budget.rel_tol * (reg.norm() + zdreg.norm()) + budget.abs_tol
        {
            return Ok(LogExpansion { sing, reg: reg * ra1, zdreg: zdreg * ra1 });
        }
        psi_a += (a + kf).inv();
        psi1 += 1.0 / (kf + 1.0);
        psi2 += 1.0 / (kf + 2.0);
        p = p * (a + kf) * z / ((kf + 2.0) * (kf + 1.0));
    }
    Err(Error::BudgetExceeded { what: "Tricomi logarithmic expansion", terms: budget.max_terms })
}

/// Asymptotic series `Ψ(a, b; z) ~ z^{−a} Σ (a)_s (a−b+1)_s / s! (−z)^{−s}`,
/// returned only when the terms fall below machine precision before they
/// start to grow.
fn tricomi_asymptotic(a: ComplexArg, b: f64, z: ComplexArg) -> Option<ComplexArg> {
    if z.norm() < ASYMPTOTIC_RADIUS || z.re <= 0.0 {
        return None;
    }
    let minus_inv = -z.inv();
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    let mut prev = f64::INFINITY;
    for s in 0..200 {
        let sf = s as f64;
        term = term * (a + sf) * (a - b + 1.0 + sf) / (sf + 1.0) * minus_inv;
        let size = term.norm();
        if size == 0.0 || size <= f64::EPSILON * sum.norm() {
            return Some(sum * (-a * z.ln()).exp());
        }
        if size > prev {
            return None;
        }
        prev = size;
        sum += term;
    }
    None
}

/// Laplace-integral evaluation for `Re z > 0` via upward shift and the
/// downward recurrence
/// `Ψ(a−1) = −(b − 2a − z) Ψ(a) − a(a − b + 1) Ψ(a+1)`.
fn tricomi_laplace(a: ComplexArg, b: f64, z: ComplexArg) -> Result<ComplexArg> {
    let shift = if a.re >= 1.0 { 0 } else { (1.0 - a.re).ceil() as usize };
    let top = a + shift as f64;
    let mut upper = laplace_integral(top + 1.0, b, z)?;
    let mut current = laplace_integral(top, b, z)?;
    let mut m = top;
    for _ in 0..shift {
        let below = -(cr(b) - 2.0 * m - z) * current - m * (m - b + 1.0) * upper;
        upper = current;
        current = below;
        m -= 1.0;
    }
    Ok(current)
}

fn laplace_integral(alpha: ComplexArg, b: f64, z: ComplexArg) -> Result<ComplexArg> {
    let cfg = QuadratureConfig::default().with_tolerances(1e-13, 1e-300).with_split_point(1.0 / z.norm().max(1e-3));
    let p = alpha - 1.0;
    let q = cr(b) - alpha - 1.0;
    let integrand = |t: f64| -> ComplexArg {
        let expo = -z * t + p * t.ln() + q * t.ln_1p();
        expo.exp()
    };
    let r = integrate_halfline(integrand, &cfg, EndpointHints::default())?;
    Ok(r.value * rgamma(alpha))
}

/// `Ψ(a, b; z)` for `b ∈ {2, 3}` away from the small-`z` region.
fn tricomi_outer(a: ComplexArg, b: f64, z: ComplexArg) -> Result<ComplexArg> {
    if let Some(n) = nonpositive_integer(a) {
        return Ok(tricomi_polynomial((-n) as u32, b, z));
    }
    if let Some(v) = tricomi_asymptotic(a, b, z) {
        return Ok(v);
    }
    if z.re > 0.0 {
        return tricomi_laplace(a, b, z);
    }
    Err(Error::domain(alloc::format!("Tricomi function with |z| > {LOG_SERIES_RADIUS} needs Re z > 0, got {z}")))
}

/// `Ψ(−n, b; z) = (−1)ⁿ (b)_n M(−n, b; z)`, a polynomial of degree `n`.
fn tricomi_polynomial(n: u32, b: f64, z: ComplexArg) -> ComplexArg {
    let mut poch = 1.0;
    for k in 0..n {
        poch *= b + k as f64;
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    // Finite sum: the series terminates after n + 1 terms.
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..n {
        let kf = k as f64;
        term = term * (kf - n as f64) / (b + kf) * z / (kf + 1.0);
        sum += term;
    }
    sum * (sign * poch)
}

/// `(Ψ(a, 2; z), z Ψ'(a, 2; z))`.
fn tricomi_pair(a: ComplexArg, z: ComplexArg, budget: &SeriesBudget) -> Result<(ComplexArg, ComplexArg)> {
    if let Some(n) = nonpositive_integer(a) {
        let n = (-n) as u32;
        let u = tricomi_polynomial(n, 2.0, z);
        // Ψ'(a, b; z) = −a Ψ(a+1, b+1; z)
        let du = if n == 0 { cr(0.0) } else { tricomi_polynomial(n - 1, 3.0, z) * (n as f64) };
        return Ok((u, z * du));
    }
    if z.norm() <= LOG_SERIES_RADIUS || z.re <= 0.0 {
        let e = log_expansion(a, z, budget)?;
        let zi = z.inv();
        return Ok((e.sing * zi + e.reg, -e.sing * zi + e.zdreg));
    }
    let u = tricomi_outer(a, 2.0, z)?;
    let u_next = tricomi_outer(a + 1.0, 3.0, z)?;
    Ok((u, -a * z * u_next))
}

/// `Ψ(a, 2; z)`, the Tricomi function with second parameter 2.
///
/// When `a` is a nonpositive integer the function is a polynomial and that
/// exact limit is returned.
pub fn tricomi_psi(a: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    tricomi_psi_with(a, z, &SeriesBudget::default())
}

pub fn tricomi_psi_with(a: ComplexArg, z: ComplexArg, budget: &SeriesBudget) -> Result<ComplexArg> {
    budget.validate()?;
    crate::ensure_finite(a, "Tricomi parameter")?;
    crate::ensure_finite(z, "Tricomi argument")?;
    if z == cr(0.0) {
        return Err(Error::domain("Tricomi function is singular at z = 0"));
    }
    Ok(tricomi_pair(a, z, budget)?.0)
}

/// `(M_{κ,1/2}(z), M'_{κ,1/2}(z))`. Exactly `(0, 1)` at `z = 0`.
pub fn whittaker_m_with(kappa: ComplexArg, z: ComplexArg, budget: &SeriesBudget) -> Result<(ComplexArg, ComplexArg)> {
    budget.validate()?;
    crate::ensure_finite(kappa, "Whittaker κ")?;
    crate::ensure_finite(z, "Whittaker argument")?;
    if z == cr(0.0) {
        return Ok((cr(0.0), cr(1.0)));
    }
    let a = 1.0 - kappa;
    let phi = kummer_m(a, 2.0, z, budget)?;
    // Φ'(a, 2; z) = (a/2) Φ(a+1, 3; z)
    let dphi = a * 0.5 * kummer_m(a + 1.0, 3.0, z, budget)?;
    let damp = (-z * 0.5).exp();
    Ok((damp * z * phi, damp * ((1.0 - z * 0.5) * phi + z * dphi)))
}

pub fn whittaker_m(kappa: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    Ok(whittaker_m_with(kappa, z, &SeriesBudget::default())?.0)
}

pub fn whittaker_m_prime(kappa: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    Ok(whittaker_m_with(kappa, z, &SeriesBudget::default())?.1)
}

/// `(W_{κ,1/2}(z), W'_{κ,1/2}(z))`.
///
/// At `z = 0` the value is the limit `1/Γ(1−κ)`; the derivative diverges
/// logarithmically there and is reported as a domain error.
pub fn whittaker_w_with(kappa: ComplexArg, z: ComplexArg, budget: &SeriesBudget) -> Result<(ComplexArg, ComplexArg)> {
    budget.validate()?;
    crate::ensure_finite(kappa, "Whittaker κ")?;
    crate::ensure_finite(z, "Whittaker argument")?;
    let a = 1.0 - kappa;
    if z == cr(0.0) {
        return Err(Error::domain("W' is singular at z = 0"));
    }
    let damp = (-z * 0.5).exp();
    if nonpositive_integer(a).is_none() && z.norm() <= LOG_SERIES_RADIUS {
        // Cancel the 1/z pieces analytically.
        let e = log_expansion(a, z, budget)?;
        let w = damp * (e.sing + z * e.reg);
        let dw = damp * (e.reg - e.sing * 0.5 - z * 0.5 * e.reg + e.zdreg);
        return Ok((w, dw));
    }
    let (u, zdu) = tricomi_pair(a, z, budget)?;
    Ok((damp * z * u, damp * ((1.0 - z * 0.5) * u + zdu)))
}

pub fn whittaker_w(kappa: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    if z == cr(0.0) {
        crate::ensure_finite(kappa, "Whittaker κ")?;
        return Ok(rgamma(1.0 - kappa));
    }
    Ok(whittaker_w_with(kappa, z, &SeriesBudget::default())?.0)
}

pub fn whittaker_w_prime(kappa: ComplexArg, z: ComplexArg) -> Result<ComplexArg> {
    Ok(whittaker_w_with(kappa, z, &SeriesBudget::default())?.1)
}

/// Coefficients of
/// `Ψ(a, 2; x) = A₋₁x⁻¹ + A₀ + A₁x + A₂x² + … + (B₀ + B₁x + B₂x² + …) log x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TricomiExpansion {
    pub a_m1: ComplexArg,
    pub a0: ComplexArg,
    pub a1: ComplexArg,
    pub a2: ComplexArg,
    pub b0: ComplexArg,
    pub b1: ComplexArg,
    pub b2: ComplexArg,
}

impl TricomiExpansion {
    pub fn new(a: ComplexArg) -> Result<Self> {
        let ra = rgamma(a);
        let ra1 = rgamma(a - 1.0);
        let h1 = -EULER_GAMMA;
        let h2 = 1.0 - EULER_GAMMA;
        let h3 = 1.5 - EULER_GAMMA;
        let h4 = 11.0 / 6.0 - EULER_GAMMA;
        let (a0, a1, a2) = if ra1 == cr(0.0) {
            (cr(0.0), cr(0.0), cr(0.0))
        } else {
            let psi = digamma(a)?;
            let psi1 = psi + a.inv();
            let psi2 = psi1 + (a + 1.0).inv();
            ((psi - h1 - h2) * ra1, a * (psi1 - h2 - h3) * ra1 * 0.5, a * (a + 1.0) * (psi2 - h3 - h4) * ra1 / 12.0)
        };
        Ok(Self { a_m1: ra, a0, a1, a2, b0: ra1, b1: a * ra1 * 0.5, b2: a * (a + 1.0) * ra1 / 12.0 })
    }

    /// `W_{κ,1/2}(x) ≈ A₋₁ + (A₀ − A₋₁/2) x + B₀ x log x`.
    pub fn whittaker_w_leading(&self, x: ComplexArg) -> ComplexArg {
        self.a_m1 + (self.a0 - self.a_m1 * 0.5) * x + self.b0 * x * x.ln()
    }
}
