//! Hurwitz zeta function at `s = 1/2`.

use crate::{cr, ComplexArg, Error, Result};

/// `B_{2j}/(2j)!` for `j = 1..=6`.
const B_OVER_FACT: [f64; 6] =
    [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0, -691.0 / 1307674368000.0];

/// Minimum real part of the shifted argument before Euler–Maclaurin.
const SHIFT_TARGET: f64 = 10.0;

/// `Z(1/2, v) = Σ_{k≥0} (k + v)^{−1/2}`, analytically continued, for
/// `Re v > 0`.
///
/// Direct summation up to `v + N` with `Re(v + N) ≥ 10`, then six
/// Euler–Maclaurin corrections.
pub fn hurwitz_zeta_half(v: ComplexArg) -> Result<ComplexArg> {
    crate::ensure_finite(v, "Hurwitz argument")?;
    if v.re <= 0.0 {
        return Err(Error::domain(alloc::format!("hurwitz_zeta_half needs Re v > 0, got {v}")));
    }
    let mut head = cr(0.0);
    let mut w = v;
    while w.re < SHIFT_TARGET {
        head += w.sqrt().inv();
        w += 1.0;
    }
    let root = w.sqrt();
    let inv = w.inv();
    let inv2 = inv * inv;
    // Z(s, w) ≈ w^{1−s}/(s−1) + w^{−s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j−1} w^{−s−2j+1}
    let s = 0.5;
    let mut poch = s; // (s)_{2j−1}
    let mut power = inv / root; // w^{−s−1}
    let mut tail = cr(0.0);
    for (j, coeff) in B_OVER_FACT.iter().enumerate() {
        tail += power * (coeff * poch);
        let k = 2.0 * j as f64 + 1.0;
        poch *= (s + k) * (s + k + 1.0);
        power *= inv2;
    }
    Ok(head - 2.0 * root + 0.5 / root + tail)
}
