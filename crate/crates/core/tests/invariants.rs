use std::f64::consts::PI;

use greenkern_core::krein::{bound_states, KreinOptions, KreinSystem};
use greenkern_core::models::{
    green, green_coulomb, green_free, green_invosc, landau_phase, GreenModel, Point, SpectralPoint,
};
use greenkern_core::quadrature::{integrate_halfline, integrate_interval, EndpointHints, QuadratureConfig};
use greenkern_core::specfun::{
    bessel_k, digamma, gamma, hurwitz_zeta_half, weber_u_with_derivative, whittaker_m, whittaker_m_prime, whittaker_w,
    whittaker_w_prime, BesselOrder,
};
use greenkern_core::Complex64;
use proptest::prelude::*;

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * (1.0 + a.norm().max(b.norm()))
}

/// Spectral parameters away from `[0, ∞)`.
fn zeta() -> impl Strategy<Value = Complex64> {
    (-20.0..-0.05f64, -5.0..5.0f64).prop_map(|(re, im)| cx(re, im))
}

fn point3() -> impl Strategy<Value = Point> {
    prop::array::uniform3(-2.0..2.0f64).prop_map(|v| Point::new(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn gamma_recurrence(re in -4.5..6.0f64, im in 0.1..8.0f64) {
        let z = cx(re, im);
        prop_assert!(close(gamma(z + 1.0).unwrap(), z * gamma(z).unwrap(), 1e-12));
    }

    #[test]
    fn gamma_reflection(re in -3.0..3.0f64, im in 0.05..3.0f64) {
        let z = cx(re, im);
        let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
        let rhs = PI / (PI * z).sin();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm());
    }

    #[test]
    fn digamma_recurrence(re in -4.5..8.0f64, im in 0.1..8.0f64) {
        let z = cx(re, im);
        prop_assert!(close(digamma(z + 1.0).unwrap(), digamma(z).unwrap() + z.inv(), 1e-12));
    }

    #[test]
    fn hurwitz_shift(re in 0.01..20.0f64, im in -10.0..10.0f64) {
        let v = cx(re, im);
        let lhs = hurwitz_zeta_half(v).unwrap() - hurwitz_zeta_half(v + 1.0).unwrap();
        prop_assert!(close(lhs, v.sqrt().inv(), 1e-12));
    }

    #[test]
    fn bessel_k_real_axis(x in 0.01..40.0f64) {
        let k0 = bessel_k(BesselOrder::Zero, cx(x, 0.0)).unwrap();
        let k1 = bessel_k(BesselOrder::One, cx(x, 0.0)).unwrap();
        let kh = bessel_k(BesselOrder::Half, cx(x, 0.0)).unwrap();
        prop_assert!(k0.re > 0.0 && k1.re > k0.re);
        prop_assert!(k0.im.abs() <= 1e-14 * k0.re);
        prop_assert!(close(kh, cx((PI / (2.0 * x)).sqrt() * (-x).exp(), 0.0), 1e-13));
    }

    #[test]
    fn bessel_k_conjugation(re in 0.05..30.0f64, im in -30.0..30.0f64) {
        let z = cx(re, im);
        for order in [BesselOrder::Zero, BesselOrder::One] {
            let a = bessel_k(order, z).unwrap();
            let b = bessel_k(order, z.conj()).unwrap();
            prop_assert!(close(a.conj(), b, 1e-12));
        }
    }

    #[test]
    fn whittaker_wronskian(kre in -3.0..3.0f64, kim in -2.0..2.0f64, zre in 0.1..25.0f64, zim in -5.0..5.0f64) {
        // M W' − M' W = −1/Γ(1 − κ) for μ = 1/2.
        let (k, z) = (cx(kre, kim), cx(zre, zim));
        let m = whittaker_m(k, z).unwrap();
        let mp = whittaker_m_prime(k, z).unwrap();
        let w = whittaker_w(k, z).unwrap();
        let wp = whittaker_w_prime(k, z).unwrap();
        let lhs = m * wp - mp * w;
        let rhs = -gamma(1.0 - k).unwrap().inv();
        let scale = (m * wp).norm() + (mp * w).norm();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * scale.max(rhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn weber_wronskian(are in -3.0..3.0f64, aim in -3.0..3.0f64, x in -4.0..4.0f64) {
        // U(a, z) U'(a, −z)·(−1) − U'(a, z) U(a, −z) = −√(2π)/Γ(1/2 + a).
        let (a, z) = (cx(are, aim), cx(x, 0.3 * x));
        let (u, up) = weber_u_with_derivative(a, z).unwrap();
        let (v, vp) = weber_u_with_derivative(a, -z).unwrap();
        let lhs = -u * vp - up * v;
        let rhs = (2.0 * PI).sqrt() / gamma(0.5 + a).unwrap();
        let scale = (u * vp).norm() + (up * v).norm();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * scale.max(rhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn gaussian_halfline(a in 0.05..50.0f64) {
        let cfg = QuadratureConfig::default();
        let r = integrate_halfline(|t| cx((-a * t * t).exp(), 0.0), &cfg, EndpointHints::default()).unwrap();
        prop_assert!(close(r.value, cx(0.5 * (PI / a).sqrt(), 0.0), 1e-10));
    }

    #[test]
    fn interval_additivity(a in -3.0..0.0f64, m in 0.1..2.0f64, b in 2.5..5.0f64, w in 0.1..4.0f64) {
        let cfg = QuadratureConfig::default().with_tolerances(1e-13, 1e-15);
        let f = |t: f64| cx((w * t).cos(), (t * t).sin());
        let whole = integrate_interval(f, a, b, &cfg).unwrap().value;
        let parts = integrate_interval(f, a, m, &cfg).unwrap().value + integrate_interval(f, m, b, &cfg).unwrap().value;
        prop_assert!(close(whole, parts, 1e-11));
    }

    #[test]
    fn interval_linearity(s in -5.0..5.0f64, t in -5.0..5.0f64) {
        let cfg = QuadratureConfig::default().with_tolerances(1e-13, 1e-15);
        let f = |x: f64| cx(x.exp(), 0.0);
        let g = |x: f64| cx(0.0, (3.0 * x).sin());
        let lhs = integrate_interval(|x| s * f(x) + t * g(x), 0.0, 2.0, &cfg).unwrap().value;
        let rhs = s * integrate_interval(f, 0.0, 2.0, &cfg).unwrap().value
            + t * integrate_interval(g, 0.0, 2.0, &cfg).unwrap().value;
        prop_assert!(close(lhs, rhs, 1e-11));
    }

    #[test]
    fn kappa_branch(z in zeta()) {
        let s = SpectralPoint::new(z).unwrap();
        prop_assert!(s.kappa().re > 0.0);
        prop_assert!(close(s.kappa() * s.kappa(), -z, 1e-14));
    }

    #[test]
    fn free_reciprocity_and_decay(dim in 1usize..=4, r in 0.01..5.0f64, z in zeta()) {
        let s = SpectralPoint::new(z).unwrap();
        let a = green_free(dim, r, &s).unwrap().value;
        let b = green_free(dim, r, &s.conj()).unwrap().value;
        prop_assert!(close(a.conj(), b, 1e-13));
        let e = SpectralPoint::real(z.re).unwrap();
        let g1 = green_free(dim, r, &e).unwrap().value;
        let g2 = green_free(dim, r * 1.1, &e).unwrap().value;
        prop_assert!(g1.re > g2.re && g2.re > 0.0);
    }

    #[test]
    fn coulomb_reduces_to_free(x in point3(), y in point3(), z in zeta()) {
        prop_assume!(x.distance(&y).unwrap() > 1e-3);
        let s = SpectralPoint::new(z).unwrap();
        let a = green_coulomb(&x, &y, &s, 0.0).unwrap().value;
        let b = green_free(3, x.distance(&y).unwrap(), &s).unwrap().value;
        prop_assert!(close(a, b, 1e-9), "{a} vs {b}");
    }

    #[test]
    fn coulomb_symmetry(x in point3(), y in point3(), z in zeta(), q in -2.0..2.0f64) {
        prop_assume!(x.distance(&y).unwrap() > 1e-3);
        let s = SpectralPoint::new(z).unwrap();
        let a = green_coulomb(&x, &y, &s, q).unwrap().value;
        let b = green_coulomb(&y, &x, &s, q).unwrap().value;
        let c = green_coulomb(&x, &y, &s.conj(), q).unwrap().value;
        prop_assert!(close(a, b, 1e-9));
        prop_assert!(close(a.conj(), c, 1e-9));
    }

    #[test]
    fn landau_phase_is_unimodular_and_antisymmetric(x in point3(), y in point3(), xi in -3.0..3.0f64) {
        let p = landau_phase(&x, &y, xi);
        prop_assert!((p.norm() - 1.0).abs() < 1e-14);
        prop_assert!(close(p.conj(), landau_phase(&y, &x, xi), 1e-14));
    }

    #[test]
    fn invosc_symmetry(x in -3.0..3.0f64, y in -3.0..3.0f64, re in -10.0..10.0f64, im in 0.1..5.0f64, omega in 0.2..3.0f64) {
        let s = SpectralPoint::new(cx(re, im)).unwrap();
        let a = green_invosc(x, y, &s, omega).unwrap().value;
        let b = green_invosc(y, x, &s, omega).unwrap().value;
        let c = green_invosc(-x, -y, &s, omega).unwrap().value;
        prop_assert!(close(a, b, 1e-12));
        prop_assert!(close(a, c, 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn landau_hermitian(x in point3(), y in point3(), e in -6.0..0.5f64, xi in 0.3..2.0f64) {
        prop_assume!(x.distance(&y).unwrap() > 0.05);
        let model = GreenModel::landau(xi).unwrap();
        let s = SpectralPoint::real(e).unwrap();
        let cfg = QuadratureConfig::default();
        let a = green(&model, &x, &y, &s, &cfg).unwrap().value;
        let b = green(&model, &y, &x, &s, &cfg).unwrap().value;
        prop_assert!(close(a.conj(), b, 1e-9));
    }

    #[test]
    fn single_point_energy(alpha in -2.0..-0.05f64) {
        let sys = KreinSystem::new(GreenModel::free(3).unwrap(), vec![Point::origin(3)], vec![alpha]).unwrap();
        let lo = -16.0 * PI * PI * 4.5;
        let roots = bound_states(&sys, (lo, -1e-3), 1e-10, &KreinOptions::default()).unwrap();
        prop_assert_eq!(roots.len(), 1);
        prop_assert!((roots[0].energy + 16.0 * PI * PI * alpha * alpha).abs() < 1e-8);
    }
}
