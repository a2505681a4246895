//! Complex Gamma, reciprocal Gamma and digamma.

use core::f64::consts::PI;

use super::nonpositive_integer;
use crate::{cr, ComplexArg, Error, Result};

/// Bernoulli numbers `B_2 .. B_20`.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Shift applied before the Stirling series; `|z| >= 15` keeps the tail below
/// machine precision with ten correction terms.
const STIRLING_MIN: f64 = 15.0;

/// `ln Γ(z)` for `Re z >= 1/2`, up to a multiple of `2πi`.
fn ln_gamma_right(z: ComplexArg) -> ComplexArg {
    let mut w = z;
    let mut prod = cr(1.0);
    while w.norm() < STIRLING_MIN || w.re < 1.0 {
        prod *= w;
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = ComplexArg::new(0.0, 0.0);
    let mut pow = inv;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        series += pow * (b / (n * (n - 1.0)));
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - prod.ln()
}

/// `Γ(n)` for real integers `1 ≤ n ≤ 20`, exact in `f64`.
fn small_factorial(z: ComplexArg) -> Option<f64> {
    if z.im != 0.0 || z.re < 1.0 || z.re > 20.0 || z.re.fract() != 0.0 {
        return None;
    }
    Some((1..z.re as u32).fold(1.0, |acc, k| acc * k as f64))
}

/// `ln Γ(z)`; the imaginary part is only defined modulo `2π`.
pub fn ln_gamma(z: ComplexArg) -> Result<ComplexArg> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::pole("gamma", z));
    }
    if z.re < 0.5 {
        // Γ(z) = π / (sin(πz) Γ(1 − z))
        let s = (z * PI).sin();
        Ok(cr(PI).ln() - s.ln() - ln_gamma_right(1.0 - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

/// Complex Gamma function.
///
/// Within [`super::POLE_TOLERANCE`] of `0, −1, −2, …` this returns
/// [`Error::Pole`]: for the Coulomb model these points are bound states.
pub fn gamma(z: ComplexArg) -> Result<ComplexArg> {
    crate::ensure_finite(z, "gamma argument")?;
    if nonpositive_integer(z).is_some() {
        return Err(Error::pole("gamma", z));
    }
    if let Some(f) = small_factorial(z) {
        return Ok(cr(f));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        Ok(cr(PI) / (s * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// Reciprocal Gamma `1/Γ(z)`, entire; exactly zero at nonpositive integers.
pub fn rgamma(z: ComplexArg) -> ComplexArg {
    if nonpositive_integer(z).is_some() {
        return cr(0.0);
    }
    if let Some(f) = small_factorial(z) {
        return cr(1.0 / f);
    }
    if z.re < 0.5 {
        (z * PI).sin() * ln_gamma_right(1.0 - z).exp() / PI
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

/// Digamma `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: ComplexArg) -> Result<ComplexArg> {
    crate::ensure_finite(z, "digamma argument")?;
    if nonpositive_integer(z).is_some() {
        return Err(Error::pole("digamma", z));
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let t = z * PI;
        return Ok(digamma_right(1.0 - z) - PI * t.cos() / t.sin());
    }
    Ok(digamma_right(z))
}

fn digamma_right(z: ComplexArg) -> ComplexArg {
    let mut w = z;
    let mut acc = ComplexArg::new(0.0, 0.0);
    while w.norm() < STIRLING_MIN {
        acc -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = ComplexArg::new(0.0, 0.0);
    let mut pow = inv2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        series += pow * (b / n);
        pow *= inv2;
    }
    acc + w.ln() - inv * 0.5 - series
}
