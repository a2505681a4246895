//! Modified Bessel functions of the second kind for orders 0, 1 and 1/2.

use core::f64::consts::PI;

use crate::{cr, ComplexArg, Error, Result, EULER_GAMMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselOrder {
    Zero,
    One,
    Half,
}

/// Below this modulus the ascending series is used, above it Steed's
/// continued fraction.
const SERIES_RADIUS: f64 = 2.0;

/// `K_ν(z)` for `Re z > 0`.
///
/// For small `z` the order-one function keeps its full logarithmic
/// structure `K₁(z) = 1/z + (z/2) ln(z/2) (1 + O(z²)) + …`, which the
/// four-dimensional resolvent relies on.
pub fn bessel_k(order: BesselOrder, z: ComplexArg) -> Result<ComplexArg> {
    crate::ensure_finite(z, "bessel_k argument")?;
    if z.re <= 0.0 {
        return Err(Error::domain(alloc::format!("bessel_k needs Re z > 0, got {z}")));
    }
    Ok(match order {
        BesselOrder::Half => (cr(PI) / (2.0 * z)).sqrt() * (-z).exp(),
        BesselOrder::Zero | BesselOrder::One => {
            let (k0, k1) = if z.norm() <= SERIES_RADIUS { k01_series(z) } else { k01_steed(z) };
            if order == BesselOrder::Zero {
                k0
            } else {
                k1
            }
        }
    })
}

/// Ascending series for `K₀` and `K₁`.
fn k01_series(z: ComplexArg) -> (ComplexArg, ComplexArg) {
    let q = z * z * 0.25;
    let log_half = (z * 0.5).ln();
    // ψ(k+1) and ψ(k+2) by the harmonic recurrence.
    let mut psi1 = -EULER_GAMMA;
    let mut psi2 = 1.0 - EULER_GAMMA;
    // t0 = q^k / (k!)², t1 = q^k / (k! (k+1)!)
    let mut t0 = cr(1.0);
    let mut t1 = cr(1.0);
    let mut i0 = cr(0.0);
    let mut s0 = cr(0.0);
    let mut i1 = cr(0.0);
    let mut s1 = cr(0.0);
    for k in 0..200 {
        let kf = k as f64;
        i0 += t0;
        s0 += t0 * psi1;
        i1 += t1;
        s1 += t1 * (psi1 + psi2);
        if t0.norm() <= 1e-17 * i0.norm() && k > 2 {
            break;
        }
        psi1 += 1.0 / (kf + 1.0);
        psi2 += 1.0 / (kf + 2.0);
        t0 = t0 * q / ((kf + 1.0) * (kf + 1.0));
        t1 = t1 * q / ((kf + 1.0) * (kf + 2.0));
    }
    let k0 = -log_half * i0 + s0;
    // I₁(z) = (z/2) Σ q^k / (k!(k+1)!)
    let k1 = z.inv() + log_half * (z * 0.5) * i1 - z * 0.25 * s1;
    (k0, k1)
}

/// Steed's method (Temme's CF2) for `ν = 0`, giving `K₀` and `K₁`.
fn k01_steed(x: ComplexArg) -> (ComplexArg, ComplexArg) {
    let a1 = cr(0.25);
    let mut b = 2.0 * (1.0 + x);
    let mut d = b.inv();
    let mut h = d;
    let mut delh = d;
    let mut q1 = cr(0.0);
    let mut q2 = cr(1.0);
    let mut q = a1;
    let mut cc = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        cc = -a * cc / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += cc * qnew;
        b += 2.0;
        d = (b + a * d).inv();
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if dels.norm() < 1e-17 * s.norm() && delh.norm() < 1e-17 * h.norm() {
            break;
        }
    }
    h = a1 * h;
    let k0 = (cr(PI) / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}
