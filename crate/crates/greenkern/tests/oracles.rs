//! Independent oracles for the frozen reference values.
//!
//! Nothing here calls into the library's numerics. Run with
//! `GREENKERN_WRITE_ORACLES=1` to regenerate `fixtures/oracles.json`.

use std::f64::consts::{LN_2, PI};

use greenkern::oracles::{self, OracleEntry, OracleFixture, TolKind};
use greenkern::verify;

const EULER: f64 = 0.577_215_664_901_532_9;

/// Double-exponential rule for `∫₀^∞ f`, `t = exp(π/2·sinh s)`.
fn exp_sinh(f: impl Fn(f64) -> f64) -> f64 {
    let s_max = 5.0;
    let sum = |h: f64| {
        let n = (s_max / h).ceil() as i64;
        let mut acc = 0.0;
        for k in -n..=n {
            let s = k as f64 * h;
            let t = (0.5 * PI * s.sinh()).exp();
            let w = t * 0.5 * PI * s.cosh();
            let v = f(t) * w;
            if v.is_finite() {
                acc += v;
            }
        }
        acc * h
    };
    let mut h = 0.25;
    let mut prev = sum(h);
    loop {
        h *= 0.5;
        let cur = sum(h);
        if (cur - prev).abs() <= 1e-15 * cur.abs() || h < 1.0 / 4096.0 {
            return cur;
        }
        prev = cur;
    }
}

/// Trapezoid rule for `∫₀^U f` with `f` even and negligible beyond `U`.
fn even_trapezoid(f: impl Fn(f64) -> f64, upper: f64) -> f64 {
    let h = 1.0 / 256.0;
    let n = (upper / h).ceil() as usize;
    h * (0.5 * f(0.0) + (1..=n).map(|k| f(k as f64 * h)).sum::<f64>())
}

/// `Γ(x)` for `x > 0` by upward shift and Stirling's series.
fn gamma(x: f64) -> f64 {
    let mut product = 1.0;
    let mut y = x;
    while y < 15.0 {
        product *= y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let series =
        inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    ((y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + series).exp() / product
}

/// `ψ(x)` for `x > 0`: recurrence up to 30, then the asymptotic series.
fn digamma(x: f64) -> f64 {
    let mut acc = 0.0;
    let mut y = x;
    while y < 30.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    acc + y.ln()
        - 0.5 / y
        - inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))))
}

/// `K₀(z) = ∫₀^∞ e^{−z cosh u} du`.
fn bessel_k0(z: f64) -> f64 {
    even_trapezoid(|u| (-z * u.cosh()).exp(), (800.0 / z).acosh())
}

/// `K₁(z) = ∫₀^∞ e^{−z cosh u} cosh u du`.
fn bessel_k1(z: f64) -> f64 {
    even_trapezoid(|u| (-z * u.cosh()).exp() * u.cosh(), (800.0 / z).acosh())
}

/// `Φ(a, 2; z)` by 80 terms of its Taylor series.
fn kummer(a: f64, z: f64) -> f64 {
    let (mut term, mut sum) = (1.0, 1.0);
    for n in 0..80 {
        let n = n as f64;
        term *= (a + n) * z / ((2.0 + n) * (n + 1.0));
        sum += term;
    }
    sum
}

/// `Φ'(a, 2; z)` by the same series.
fn kummer_prime(a: f64, z: f64) -> f64 {
    // Φ'(a, 2; z) = (a/2) Φ(a + 1, 3; z), summed directly.
    let (mut term, mut sum) = (a / 2.0, a / 2.0);
    for n in 0..80 {
        let n = n as f64;
        term *= (a + 1.0 + n) * z / ((3.0 + n) * (n + 1.0));
        sum += term;
    }
    sum
}

/// `Ψ(a, c; z) = (1/Γ(a)) ∫₀^∞ e^{−zt} t^{a−1} (1+t)^{c−a−1} dt`.
fn tricomi(a: f64, c: f64, z: f64) -> f64 {
    exp_sinh(|t| (-z * t).exp() * t.powf(a - 1.0) * (1.0 + t).powf(c - a - 1.0)) / gamma(a)
}

/// `dΨ(a, c; z)/dz`.
fn tricomi_prime(a: f64, c: f64, z: f64) -> f64 {
    -exp_sinh(|t| (-z * t).exp() * t.powf(a) * (1.0 + t).powf(c - a - 1.0)) / gamma(a)
}

fn whittaker_m(k: f64, z: f64) -> f64 {
    (-z / 2.0).exp() * z * kummer(1.0 - k, z)
}

fn whittaker_m_prime(k: f64, z: f64) -> f64 {
    let a = 1.0 - k;
    (-z / 2.0).exp() * ((1.0 - z / 2.0) * kummer(a, z) + z * kummer_prime(a, z))
}

fn whittaker_w(k: f64, z: f64) -> f64 {
    (-z / 2.0).exp() * z * tricomi(1.0 - k, 2.0, z)
}

fn whittaker_w_prime(k: f64, z: f64) -> f64 {
    let a = 1.0 - k;
    (-z / 2.0).exp() * ((1.0 - z / 2.0) * tricomi(a, 2.0, z) + z * tricomi_prime(a, 2.0, z))
}

/// `Z(1/2, v)`: 200 direct terms, then Euler–Maclaurin with four corrections.
fn hurwitz_half(v: f64) -> f64 {
    let n = 200;
    let head: f64 = (0..n).map(|k| 1.0 / (k as f64 + v).sqrt()).sum();
    let w = v + n as f64;
    let r = w.sqrt();
    // B₂/2!·(1/2), B₄/4!·(1/2)₃, B₆/6!·(1/2)₅, B₈/8!·(1/2)₇
    let c = [
        1.0 / 12.0 * 0.5,
        -1.0 / 720.0 * 1.875,
        1.0 / 30240.0 * 1.875 * 3.5 * 4.5,
        -1.0 / 1209600.0 * 1.875 * 3.5 * 4.5 * 5.5 * 6.5,
    ];
    let mut tail = -2.0 * r + 0.5 / r;
    let mut p = 1.0 / (r * w);
    for ck in c {
        tail += ck * p;
        p /= w * w;
    }
    head + tail
}

/// `U(a, z) = e^{−z²/4}/Γ(a + 1/2) ∫₀^∞ t^{a−1/2} e^{−t²/2 − zt} dt`.
fn weber_integral(a: f64, z: f64) -> f64 {
    (-z * z / 4.0).exp() / gamma(a + 0.5) * exp_sinh(|t| t.powf(a - 0.5) * (-0.5 * t * t - z * t).exp())
}

/// Taylor series of `u'' = (z²/4 + a) u` from `u(0)`, `u'(0)`.
fn weber_ode(a: f64, u0: f64, u1: f64, z: f64) -> f64 {
    let mut c = vec![u0, u1];
    for n in 0..120 {
        let prev = if n >= 2 { c[n - 2] } else { 0.0 };
        let next = (a * c[n] + 0.25 * prev) / ((n + 1) as f64 * (n + 2) as f64);
        c.push(next);
    }
    c.iter().rev().fold(0.0, |acc, ck| acc * z + ck)
}

fn landau_params(zeta: f64, xi: f64) -> (f64, f64) {
    (PI * xi.abs(), 0.5 - zeta / (4.0 * PI * xi.abs()))
}

/// `√|ξ|/(4π) ∫₀^∞ exp[−A(ρ²/(eᵗ−1) + z²/t)] / ((1 − e^{−t}) e^{ct} √t) dt`.
fn landau_f(dx: [f64; 3], zeta: f64, xi: f64) -> f64 {
    let (a, c) = landau_params(zeta, xi);
    let rho2 = dx[0] * dx[0] + dx[1] * dx[1];
    let z2 = dx[2] * dx[2];
    let integral = exp_sinh(|t| {
        let damp = (-a * (rho2 / t.exp_m1() + z2 / t)).exp();
        if damp == 0.0 {
            return 0.0;
        }
        damp * (-c * t).exp() / (-(-t).exp_m1() * t.sqrt())
    });
    xi.abs().sqrt() / (4.0 * PI) * integral
}

fn landau_q(zeta: f64, xi: f64) -> f64 {
    let (_, c) = landau_params(zeta, xi);
    0.25 * (xi.abs() / PI).sqrt() * hurwitz_half(c)
}

fn coulomb_diag(zeta: f64, q: f64) -> f64 {
    let k = (-zeta).sqrt();
    -k / (4.0 * PI) + q / (4.0 * PI) * (digamma(1.0 + q / (2.0 * k)) + k.ln() + LN_2 - 1.0 + 2.0 * EULER)
}

/// Hostler's closed form with series `M` and Laplace-integral `W`.
fn coulomb_green(x: [f64; 3], y: [f64; 3], zeta: f64, q: f64) -> f64 {
    let norm = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let r = norm([x[0] - y[0], x[1] - y[1], x[2] - y[2]]);
    let k = (-zeta).sqrt();
    let nu = -q / (2.0 * k);
    let (xi, eta) = (norm(x) + norm(y) + r, norm(x) + norm(y) - r);
    let wronskian_like = whittaker_w(nu, k * xi) * whittaker_m_prime(nu, k * eta)
        - whittaker_w_prime(nu, k * xi) * whittaker_m(nu, k * eta);
    gamma(1.0 - nu) / (4.0 * PI * r) * wronskian_like
}

/// Root of `−√(−E)/(4π) = α` by bisection.
fn single_point_root(alpha: f64) -> f64 {
    let f = |e: f64| -(-e).sqrt() / (4.0 * PI) - alpha;
    let (mut a, mut b) = (-1e5, -1e-9);
    for _ in 0..300 {
        let m = 0.5 * (a + b);
        if f(m) * f(a) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn entry(id: &str, op: &str, args: &[f64], value: f64, tol: f64, tol_kind: TolKind, oracle: &str) -> OracleEntry {
    OracleEntry {
        id: id.into(),
        op: op.into(),
        args: args.to_vec(),
        value: [value, 0.0],
        tol,
        tol_kind,
        oracle: oracle.into(),
    }
}

fn compute() -> Vec<OracleEntry> {
    use TolKind::{Abs, Rel};
    let quad = "double-exponential quadrature of the integral representation";
    vec![
        entry("digamma_half", "digamma", &[0.5, 0.0], digamma(0.5), 1e-10, Rel, "recurrence plus asymptotic series"),
        entry(
            "digamma_three_halves",
            "digamma",
            &[1.5, 0.0],
            digamma(1.5),
            1e-10,
            Rel,
            "recurrence plus asymptotic series",
        ),
        entry("digamma_5_3", "digamma", &[5.3, 0.0], digamma(5.3), 1e-10, Rel, "recurrence plus asymptotic series"),
        entry(
            "bessel_k0_1",
            "bessel_k",
            &[0.0, 1.0, 0.0],
            bessel_k0(1.0),
            1e-10,
            Rel,
            "trapezoid rule for ∫ e^{−z cosh u} du",
        ),
        entry(
            "bessel_k1_1",
            "bessel_k",
            &[1.0, 1.0, 0.0],
            bessel_k1(1.0),
            1e-10,
            Rel,
            "trapezoid rule for ∫ e^{−z cosh u} cosh u du",
        ),
        entry(
            "bessel_k0_7_5",
            "bessel_k",
            &[0.0, 7.5, 0.0],
            bessel_k0(7.5),
            1e-10,
            Rel,
            "trapezoid rule for ∫ e^{−z cosh u} du",
        ),
        entry(
            "bessel_k1_0_01",
            "bessel_k",
            &[1.0, 0.01, 0.0],
            bessel_k1(0.01),
            1e-10,
            Rel,
            "trapezoid rule for ∫ e^{−z cosh u} cosh u du",
        ),
        entry("kummer_1_1", "kummer_phi", &[1.0, 0.0, 1.0, 0.0], kummer(1.0, 1.0), 1e-10, Rel, "80-term Taylor series"),
        entry(
            "kummer_half_0_3",
            "kummer_phi",
            &[0.5, 0.0, 0.3, 0.0],
            kummer(0.5, 0.3),
            1e-10,
            Rel,
            "80-term Taylor series",
        ),
        entry(
            "kummer_m1_5_3",
            "kummer_phi",
            &[-1.5, 0.0, 3.0, 0.0],
            kummer(-1.5, 3.0),
            1e-10,
            Rel,
            "80-term Taylor series",
        ),
        entry("tricomi_1_2", "tricomi_psi", &[1.0, 0.0, 2.0, 0.0], tricomi(1.0, 2.0, 2.0), 1e-8, Rel, quad),
        entry("tricomi_1_0_1", "tricomi_psi", &[1.0, 0.0, 0.1, 0.0], tricomi(1.0, 2.0, 0.1), 1e-8, Rel, quad),
        entry("tricomi_2_1", "tricomi_psi", &[2.0, 0.0, 1.0, 0.0], tricomi(2.0, 2.0, 1.0), 1e-8, Rel, quad),
        entry("tricomi_half_0_2", "tricomi_psi", &[0.5, 0.0, 0.2, 0.0], tricomi(0.5, 2.0, 0.2), 1e-8, Rel, quad),
        entry("tricomi_2_5", "tricomi_psi", &[2.0, 0.0, 5.0, 0.0], tricomi(2.0, 2.0, 5.0), 1e-8, Rel, quad),
        entry("tricomi_1_3_30", "tricomi_psi", &[1.3, 0.0, 30.0, 0.0], tricomi(1.3, 2.0, 30.0), 1e-8, Rel, quad),
        entry(
            "whittaker_m_0_1",
            "whittaker_m",
            &[0.0, 0.0, 1.0, 0.0],
            whittaker_m(0.0, 1.0),
            1e-9,
            Rel,
            "80-term Kummer series",
        ),
        entry(
            "whittaker_m_half_0_3",
            "whittaker_m",
            &[0.5, 0.0, 0.3, 0.0],
            whittaker_m(0.5, 0.3),
            1e-9,
            Rel,
            "80-term Kummer series",
        ),
        entry(
            "whittaker_m_prime_half_0_3",
            "whittaker_m_prime",
            &[0.5, 0.0, 0.3, 0.0],
            whittaker_m_prime(0.5, 0.3),
            1e-9,
            Rel,
            "80-term Kummer series",
        ),
        entry("whittaker_w_0_1", "whittaker_w", &[0.0, 0.0, 1.0, 0.0], whittaker_w(0.0, 1.0), 1e-9, Rel, quad),
        entry("whittaker_w_half_0_2", "whittaker_w", &[0.5, 0.0, 0.2, 0.0], whittaker_w(0.5, 0.2), 1e-9, Rel, quad),
        entry(
            "whittaker_w_prime_m0_4_1_7",
            "whittaker_w_prime",
            &[-0.4, 0.0, 1.7, 0.0],
            whittaker_w_prime(-0.4, 1.7),
            1e-9,
            Rel,
            quad,
        ),
        entry(
            "hurwitz_1",
            "hurwitz_zeta_half",
            &[1.0, 0.0],
            hurwitz_half(1.0),
            1e-10,
            Rel,
            "Euler–Maclaurin with 200 direct terms",
        ),
        entry(
            "hurwitz_0_3",
            "hurwitz_zeta_half",
            &[0.3, 0.0],
            hurwitz_half(0.3),
            1e-10,
            Rel,
            "Euler–Maclaurin with 200 direct terms",
        ),
        entry(
            "hurwitz_1e4",
            "hurwitz_zeta_half",
            &[1e4, 0.0],
            hurwitz_half(1e4),
            1e-10,
            Rel,
            "Euler–Maclaurin with 200 direct terms",
        ),
        entry(
            "weber_mhalf_1",
            "weber_u",
            &[-0.5, 0.0, 1.0, 0.0],
            weber_ode(-0.5, 1.0, 0.0, 1.0),
            1e-8,
            Rel,
            "Taylor series of the Weber equation from U(−1/2, 0) = 1, U'(−1/2, 0) = 0",
        ),
        entry("weber_half_0", "weber_u", &[0.5, 0.0, 0.0, 0.0], weber_integral(0.5, 0.0), 1e-8, Rel, quad),
        entry("weber_half_1_5", "weber_u", &[0.5, 0.0, 1.5, 0.0], weber_integral(0.5, 1.5), 1e-8, Rel, quad),
        entry("weber_0_2", "weber_u", &[0.0, 0.0, 2.0, 0.0], weber_integral(0.0, 2.0), 1e-8, Rel, quad),
        entry("weber_1_3_0_7", "weber_u", &[1.3, 0.0, -0.7, 0.0], weber_integral(1.3, -0.7), 1e-8, Rel, quad),
        entry(
            "gaussian_pair_1_1",
            "gaussian_pair",
            &[1.0, 1.0],
            exp_sinh(|t| (-t * t - 1.0 / (t * t)).exp()),
            1e-9,
            Rel,
            quad,
        ),
        entry(
            "free3d_r1",
            "green_free",
            &[3.0, 1.0, -1.0, 0.0],
            (-1.0f64).exp() / (4.0 * PI),
            1e-10,
            Rel,
            "closed form e^{−κr}/(4πr)",
        ),
        entry(
            "free4d_r0_01",
            "green_free",
            &[4.0, 0.01, -1.0, 0.0],
            bessel_k1(0.01) / (4.0 * PI * PI * 0.01),
            1e-10,
            Rel,
            "κK₁(κr)/(4π²r) with the trapezoid K₁",
        ),
        entry(
            "free2d_r0_3",
            "green_free",
            &[2.0, 0.3, -2.0, 0.0],
            bessel_k0(2f64.sqrt() * 0.3) / (2.0 * PI),
            1e-10,
            Rel,
            "K₀(κr)/(2π) with the trapezoid K₀",
        ),
        entry(
            "free2d_diag",
            "free_diag_const",
            &[2.0, -1.0, 0.0],
            (bessel_k0(1e-6) + (1e-6f64).ln()) / (2.0 * PI),
            1e-10,
            Abs,
            "K₀(r)/(2π) + ln(r)/(2π) at r = 1e-6 with the trapezoid K₀",
        ),
        entry(
            "coulomb_diag_q1",
            "coulomb_diag_const",
            &[-1.0, 0.0, 1.0],
            coulomb_diag(-1.0, 1.0),
            1e-10,
            Rel,
            "digamma by recurrence plus asymptotic series",
        ),
        entry(
            "coulomb_diag_qm0_5",
            "coulomb_diag_const",
            &[-1.0, 0.0, -0.5],
            coulomb_diag(-1.0, -0.5),
            1e-10,
            Rel,
            "digamma by recurrence plus asymptotic series",
        ),
        entry(
            "coulomb_qm1_axis",
            "green_coulomb",
            &[0.1, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, -1.0],
            coulomb_green([0.1, 0.0, 0.0], [0.0; 3], -1.0, -1.0),
            1e-8,
            Rel,
            "Hostler form with series M and Laplace-integral W",
        ),
        entry(
            "coulomb_q1_offaxis",
            "green_coulomb",
            &[0.3, 0.2, 0.0, -0.1, 0.4, 0.2, -2.0, 0.0, 1.0],
            coulomb_green([0.3, 0.2, 0.0], [-0.1, 0.4, 0.2], -2.0, 1.0),
            1e-8,
            Rel,
            "Hostler form with series M and Laplace-integral W",
        ),
        entry(
            "landau_axis_1",
            "landau_f",
            &[0.0, 0.0, 1.0, -1.0, 0.0, 1.0],
            landau_f([0.0, 0.0, 1.0], -1.0, 1.0),
            1e-8,
            Rel,
            quad,
        ),
        entry(
            "landau_transverse_0_5",
            "landau_f",
            &[0.5, 0.0, 0.0, -1.0, 0.0, 1.0],
            landau_f([0.5, 0.0, 0.0], -1.0, 1.0),
            1e-8,
            Rel,
            quad,
        ),
        entry(
            "landau_oblique",
            "landau_f",
            &[0.3, 0.2, 0.4, -2.0, 0.0, 1.5],
            landau_f([0.3, 0.2, 0.4], -2.0, 1.5),
            1e-8,
            Rel,
            quad,
        ),
        entry(
            "landau_far",
            "landau_f",
            &[1.2, -0.4, 0.9, 1.0, 0.0, 1.0],
            landau_f([1.2, -0.4, 0.9], 1.0, 1.0),
            1e-8,
            Rel,
            quad,
        ),
        entry(
            "landau_q_m1_1",
            "landau_q",
            &[-1.0, 0.0, 1.0],
            landau_q(-1.0, 1.0),
            1e-10,
            Rel,
            "Euler–Maclaurin with 200 direct terms",
        ),
        entry(
            "landau_q_m5_1",
            "landau_q",
            &[-5.0, 0.0, 1.0],
            landau_q(-5.0, 1.0),
            1e-10,
            Rel,
            "Euler–Maclaurin with 200 direct terms",
        ),
        entry(
            "landau_q_m1_2",
            "landau_q",
            &[-1.0, 0.0, 2.0],
            landau_q(-1.0, 2.0),
            1e-10,
            Rel,
            "Euler–Maclaurin with 200 direct terms",
        ),
        entry(
            "krein_single_m1",
            "krein_single_3d",
            &[-1.0],
            single_point_root(-1.0),
            1e-8,
            Abs,
            "bisection on −√(−E)/(4π) = α",
        ),
        entry(
            "krein_single_m0_3",
            "krein_single_3d",
            &[-0.3],
            single_point_root(-0.3),
            1e-8,
            Abs,
            "bisection on −√(−E)/(4π) = α",
        ),
    ]
}

fn fixture_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oracles.json")
}

#[test]
fn oracles_reproduce_closed_forms() {
    assert!((digamma(0.5) - (-EULER - 2.0 * LN_2)).abs() < 1e-14);
    assert!((digamma(1.5) - (2.0 - EULER - 2.0 * LN_2)).abs() < 1e-14);
    assert!((gamma(0.5) / PI.sqrt() - 1.0).abs() < 1e-14);
    assert!((kummer(1.0, 1.0) - (1f64.exp() - 1.0)).abs() < 1e-15);
    assert!((tricomi(1.0, 2.0, 0.1) - 10.0).abs() < 1e-12);
    assert!((whittaker_m(0.0, 1.0) - 2.0 * 0.5f64.sinh()).abs() < 1e-15);
    assert!((whittaker_w(0.0, 1.0) - (-0.5f64).exp()).abs() < 1e-14);
    assert!((weber_ode(-0.5, 1.0, 0.0, 1.0) - (-0.25f64).exp()).abs() < 1e-15);
    assert!((weber_integral(0.5, 0.0) - (PI / 2.0).sqrt()).abs() < 1e-14);
    let pair = exp_sinh(|t| (-t * t - 1.0 / (t * t)).exp());
    assert!((pair - 0.5 * PI.sqrt() * (-2.0f64).exp()).abs() < 1e-15);
    assert!((hurwitz_half(1.0) - hurwitz_half(2.0) - 1.0).abs() < 1e-14);
    assert!((bessel_k0(1e-6) + (1e-6f64).ln() - (LN_2 - EULER)).abs() < 1e-10);
    assert!((coulomb_diag(-1.0, 1.0) - (EULER - LN_2) / (4.0 * PI)).abs() < 1e-15);
    // q = 0 reduces to the free kernel.
    let g = coulomb_green([0.3, 0.2, 0.0], [-0.1, 0.4, 0.2], -2.0, 1e-12);
    let r = (0.16f64 + 0.04 + 0.04).sqrt();
    assert!((g - (-(2f64).sqrt() * r).exp() / (4.0 * PI * r)).abs() < 1e-10);
    // Landau on the axis: f₁ + f₂ split.
    let (a, c) = landau_params(-1.0, 1.0);
    let f1 = (-2.0 * (a * c).sqrt()).exp() / (4.0 * PI);
    let f2 = exp_sinh(|t| {
        let t2 = t * t;
        (1.0 / (-(-t2).exp_m1()) - 1.0 / t2) * (-a / t2 - c * t2).exp()
    }) / (2.0 * PI);
    assert!((f1 + f2 - landau_f([0.0, 0.0, 1.0], -1.0, 1.0)).abs() < 1e-13);
}

#[test]
fn fixture_is_frozen_oracle_output() {
    let entries = compute();
    if std::env::var_os("GREENKERN_WRITE_ORACLES").is_some() {
        let text = serde_json::to_string_pretty(&OracleFixture { entries }).unwrap();
        std::fs::write(fixture_path(), text + "\n").unwrap();
        return;
    }
    let frozen = oracles::load();
    assert_eq!(frozen.entries.len(), entries.len());
    for (f, e) in frozen.entries.iter().zip(&entries) {
        assert_eq!((&f.id, &f.op, &f.args), (&e.id, &e.op, &e.args));
        let scale = e.value[0].abs().max(1e-300);
        assert!((f.value[0] - e.value[0]).abs() <= 1e-13 * scale, "{}: {} vs {}", f.id, f.value[0], e.value[0]);
    }
}

#[test]
fn library_matches_fixture() {
    let report = verify::run_suite("oracles").unwrap();
    for c in &report.checks {
        assert!(c.passed, "{c:?}");
    }
    assert!(report.passed, "{report:?}");
}
