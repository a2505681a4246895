use core::f64::consts::PI;

use super::{EvalResult, Method, SpectralPoint};
use crate::specfun::{bessel_k, BesselOrder};
use crate::{ComplexArg, Error, Result, EULER_GAMMA};

fn check(dim: usize, s: &SpectralPoint) -> Result<()> {
    if !(1..=4).contains(&dim) {
        return Err(Error::domain(alloc::format!("free model dimension {dim} not in 1..=4")));
    }
    if s.on_nonnegative_axis() {
        return Err(Error::domain(alloc::format!("ζ = {} lies on the spectrum [0, ∞) of −Δ", s.zeta())));
    }
    Ok(())
}

/// Resolvent kernel of `−Δ` in `dim` dimensions at distance `r`.
pub fn green_free(dim: usize, r: f64, s: &SpectralPoint) -> Result<EvalResult> {
    check(dim, s)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(alloc::format!("distance must be positive, got {r}")));
    }
    let k = s.kappa();
    let (value, method) = match dim {
        1 => ((-k * r).exp() / (2.0 * k), Method::ClosedForm),
        2 => (bessel_k(BesselOrder::Zero, k * r)? / (2.0 * PI), Method::Series),
        3 => ((-k * r).exp() / (4.0 * PI * r), Method::ClosedForm),
        _ => (k * bessel_k(BesselOrder::One, k * r)? / (4.0 * PI * PI * r), Method::Series),
    };
    let value = crate::ensure_finite(value, "free Green function")?;
    let abs_error = match method {
        Method::ClosedForm => 0.0,
        _ => 1e-14 * value.norm(),
    };
    Ok(EvalResult { value, abs_error, method })
}

/// Closed-form renormalized diagonal of the free kernel: the limit of
/// `G − S` as `r → 0` with the standard singularity `S`.
///
/// In one dimension there is no singularity and this is `G(x, x)`. In four
/// dimensions no `ζ`-independent singularity exists, so a domain error is
/// returned.
pub fn free_diag_const(dim: usize, s: &SpectralPoint) -> Result<ComplexArg> {
    check(dim, s)?;
    let k = s.kappa();
    match dim {
        1 => Ok(1.0 / (2.0 * k)),
        2 => Ok(-((k * 0.5).ln() + EULER_GAMMA) / (2.0 * PI)),
        3 => Ok(-k / (4.0 * PI)),
        _ => Err(Error::domain("the four-dimensional kernel has no ζ-independent diagonal singularity")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, cr};

    #[test]
    fn examples() {
        let s = SpectralPoint::real(-1.0).unwrap();
        let g = green_free(3, 1.0, &s).unwrap();
        assert!((g.value.re - 0.029_274_915_762_159_584).abs() < 1e-17);
        assert_eq!(g.method, Method::ClosedForm);
        let s4 = SpectralPoint::real(-4.0).unwrap();
        let g = green_free(1, 1e-300, &s4).unwrap();
        assert!((g.value.re - 0.25).abs() < 1e-16);
        let g = green_free(4, 0.01, &s).unwrap();
        assert!((g.value.re / 253.302_959_105_844 - 1.0).abs() < 5e-3);
        assert!(g.abs_error > 0.0);
    }

    #[test]
    fn errors() {
        let s = SpectralPoint::real(-1.0).unwrap();
        assert_eq!(green_free(3, 0.0, &s).unwrap_err().kind(), "DomainError");
        assert_eq!(green_free(5, 1.0, &s).unwrap_err().kind(), "DomainError");
        let on = SpectralPoint::real(2.0).unwrap();
        assert_eq!(green_free(2, 1.0, &on).unwrap_err().kind(), "DomainError");
        // Slightly off the axis is fine.
        assert!(green_free(2, 1.0, &SpectralPoint::new(c(2.0, 1e-3)).unwrap()).is_ok());
    }

    #[test]
    fn hermitian_and_positive() {
        for z in [c(-1.0, 0.5), c(3.0, -2.0), c(-0.2, -4.0)] {
            let s = SpectralPoint::new(z).unwrap();
            for dim in 1..=4 {
                for r in [0.05, 0.7, 2.5] {
                    let g = green_free(dim, r, &s).unwrap().value;
                    let h = green_free(dim, r, &s.conj()).unwrap().value;
                    assert!((g - h.conj()).norm() < 1e-8 * (1.0 + g.norm()));
                }
            }
        }
        let s = SpectralPoint::real(-2.0).unwrap();
        for dim in 1..=4 {
            for r in [1e-3, 0.1, 1.0, 5.0] {
                let g = green_free(dim, r, &s).unwrap().value;
                assert!(g.re > 0.0 && g.im == 0.0);
            }
        }
    }

    #[test]
    fn diagonal_constants() {
        let s = SpectralPoint::real(-1.0).unwrap();
        assert!((free_diag_const(3, &s).unwrap() - cr(-1.0 / (4.0 * PI))).norm() < 1e-17);
        let expect = (2.0f64.ln() - EULER_GAMMA) / (2.0 * PI);
        assert!((free_diag_const(2, &s).unwrap().re - expect).abs() < 1e-16);
        assert!(free_diag_const(4, &s).is_err());
        // G − S at a tiny radius approaches the constant.
        let r = 1e-7;
        let g2 = green_free(2, r, &s).unwrap().value.re + r.ln() / (2.0 * PI);
        assert!((g2 - expect).abs() < 1e-10);
    }

    #[test]
    fn four_dimensional_log_slope() {
        let (s1, s2) = (SpectralPoint::real(-1.0).unwrap(), SpectralPoint::real(-2.0).unwrap());
        let d = |r: f64| (green_free(4, r, &s1).unwrap().value - green_free(4, r, &s2).unwrap().value).re;
        let slope = (d(1e-4) - d(1e-3)) / (1e-4f64.ln() - 1e-3f64.ln());
        let expect = -1.0 / (8.0 * PI * PI);
        assert!((slope / expect - 1.0).abs() < 1e-3, "{slope} vs {expect}");
    }
}
