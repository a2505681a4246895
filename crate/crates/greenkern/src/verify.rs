//! Self-verification suites.
//!
//! Each suite recomputes a quantitative statement about the kernels with the
//! library and compares it against an independent value at a fixed
//! tolerance. `checks` decide the verdict; `supplementary` checks carry
//! extra diagnostics and never affect it.

use std::f64::consts::PI;

use greenkern_core::krein::{bound_states, KreinOptions, KreinSystem};
use greenkern_core::models::{coulomb_diag_const, green, landau_phase, landau_q, GreenModel, Point, SpectralPoint};
use greenkern_core::quadrature::{integrate_halfline, EndpointHints, QuadratureConfig};
use greenkern_core::renorm::{
    correction_terms, default_radii, direction, extrapolate, fit_singularity, log_radii, renorm_samples,
    zeta_independence_probe, BasisTerm, Singularity,
};
use greenkern_core::specfun::hurwitz_zeta_half;
use greenkern_core::{Complex64, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::oracles;

/// One comparison of a computed `value` against a `reference`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub reference: f64,
    /// The quantity compared with `tolerance`.
    pub delta: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    /// `|value − reference| ≤ tol`.
    pub fn abs(name: impl Into<String>, value: f64, reference: f64, tol: f64) -> Self {
        let delta = (value - reference).abs();
        Self::new(name, value, reference, delta, tol)
    }

    /// `|value − reference| ≤ tol·|reference|`.
    pub fn rel(name: impl Into<String>, value: f64, reference: f64, tol: f64) -> Self {
        let delta = (value - reference).abs() / reference.abs();
        Self::new(name, value, reference, delta, tol)
    }

    /// `value < bound`; the delta is the value itself.
    pub fn below(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Self { name: name.into(), value, reference: bound, delta: value, tolerance: bound, passed: value < bound }
    }

    /// `value > bound`; the delta is `bound − value`, which must be negative.
    pub fn above(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Self { name: name.into(), value, reference: bound, delta: bound - value, tolerance: 0.0, passed: value > bound }
    }

    fn new(name: impl Into<String>, value: f64, reference: f64, delta: f64, tol: f64) -> Self {
        Self { name: name.into(), value, reference, delta, tolerance: tol, passed: delta <= tol }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub supplementary: Vec<Check>,
    /// Set when the suite aborted with a library error.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Default)]
struct Outcome {
    checks: Vec<Check>,
    supplementary: Vec<Check>,
}

type SuiteFn = fn() -> Result<Outcome, Error>;

/// Suite names in acceptance order.
pub const SUITES: [&str; 10] = [
    "pbm-identity",
    "landau-diag",
    "hermite",
    "coulomb-asym",
    "fourd-slope",
    "zeta-indep",
    "magnetic-sing",
    "invosc-decay",
    "krein-single",
    "oracles",
];

fn suite_fn(name: &str) -> Option<SuiteFn> {
    Some(match name {
        "pbm-identity" => pbm_identity,
        "landau-diag" => landau_diag,
        "hermite" => hermite,
        "coulomb-asym" => coulomb_asym,
        "fourd-slope" => fourd_slope,
        "zeta-indep" => zeta_indep,
        "magnetic-sing" => magnetic_sing,
        "invosc-decay" => invosc_decay,
        "krein-single" => krein_single,
        "oracles" => oracle_suite,
        _ => return None,
    })
}

pub fn is_suite(name: &str) -> bool {
    suite_fn(name).is_some()
}

/// Runs one suite. Unknown names yield `None`.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    let f = suite_fn(name)?;
    Some(match f() {
        Ok(out) => SuiteReport {
            suite: name.to_string(),
            passed: !out.checks.is_empty() && out.checks.iter().all(|c| c.passed),
            checks: out.checks,
            supplementary: out.supplementary,
            error: None,
        },
        Err(e) => SuiteReport {
            suite: name.to_string(),
            passed: false,
            checks: Vec::new(),
            supplementary: Vec::new(),
            error: Some(format!("{}: {e}", e.kind())),
        },
    })
}

/// Runs the named suites in parallel; the report keeps the given order.
pub fn run(names: &[&str]) -> VerifyReport {
    let suites: Vec<SuiteReport> =
        names.par_iter().map(|n| run_suite(n).unwrap_or_else(|| panic!("unknown suite {n}"))).collect();
    VerifyReport { passed: suites.iter().all(|s| s.passed), suites }
}

fn real(e: f64) -> SpectralPoint {
    SpectralPoint::real(e).expect("finite energy")
}

fn p3(v: [f64; 3]) -> Point {
    Point::new(&v).expect("three coordinates")
}

/// `∫₀^∞ exp(−bt² − c/t²) dt = ½√(π/b) e^{−2√(bc)}` for 20 seeded pairs.
fn pbm_identity() -> Result<Outcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let pairs: Vec<(f64, f64)> =
        (0..20).map(|_| (rng.random_range(0.1..=10.0), rng.random_range(0.1..=10.0))).collect();
    let cfg = QuadratureConfig::default();
    let checks = pairs
        .par_iter()
        .map(|&(b, c)| {
            let q = integrate_halfline(
                |t| Complex64::new((-b * t * t - c / (t * t)).exp(), 0.0),
                &cfg,
                EndpointHints::essential_zero(c),
            )?;
            let exact = 0.5 * (PI / b).sqrt() * (-2.0 * (b * c).sqrt()).exp();
            Ok(Check::rel(format!("b={b:.6},c={c:.6}"), q.value.re, exact, 1e-9))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Outcome { checks, ..Outcome::default() })
}

/// Axis limit of `G − 1/(4πz)` against `¼√(|ξ|/π) Z(1/2, 1/2 − ζ/(4π|ξ|))`.
fn landau_diag() -> Result<Outcome, Error> {
    let cases = [(-1.0, 1.0), (-5.0, 1.0), (-1.0, 2.0)];
    let radii = default_radii();
    let cfg = QuadratureConfig::default();
    let checks = cases
        .par_iter()
        .map(|&(zeta, xi)| {
            let model = GreenModel::landau(xi)?;
            let s = real(zeta);
            let samples = renorm_samples(
                &model,
                &Point::origin(3),
                &direction(3, true),
                &s,
                &radii,
                &Singularity::Standard { dim: 3 },
                &cfg,
            )?;
            let limit = extrapolate(&samples, correction_terms(&model))?;
            let q = landau_q(&s, xi)?;
            Ok(Check::abs(format!("zeta={zeta},xi={xi}"), limit.value.re, q.re, 1e-5))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Outcome { checks, ..Outcome::default() })
}

/// `Z(1/2, v) + 2√v ∈ (0, 1/√v)`, decreasing in `v`.
fn hermite() -> Result<Outcome, Error> {
    let mut out = Outcome::default();
    let mut previous: Option<f64> = None;
    for v in [10.0, 1e2, 1e3, 1e4] {
        let d = hurwitz_zeta_half(Complex64::new(v, 0.0))?.re + 2.0 * v.sqrt();
        out.checks.push(Check::above(format!("v={v}:positive"), d, 0.0));
        out.checks.push(Check::below(format!("v={v}:below_inv_sqrt"), d, 1.0 / v.sqrt()));
        if let Some(p) = previous {
            out.checks.push(Check::below(format!("v={v}:decreasing"), d, p));
        }
        out.supplementary.push(Check::rel(format!("v={v}:leading_term"), d, 0.5 / v.sqrt(), 1e-2));
        previous = Some(d);
    }
    Ok(out)
}

fn coulomb_fit(q: f64, basis: &[BasisTerm], tag: &str) -> Result<Vec<Check>, Error> {
    let model = GreenModel::coulomb(q)?;
    let s = real(-1.0);
    let radii = log_radii(1e-2, 1e-4, 12)?;
    let origin = Point::origin(3);
    let samples = radii
        .iter()
        .map(|&r| {
            let g = green(&model, &p3([r, 0.0, 0.0]), &origin, &s, &QuadratureConfig::default())?;
            Ok((r, g.value - 1.0 / (4.0 * PI * r)))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let fit = fit_singularity(&samples, basis)?;
    let c_log = fit.c_log().expect("log term in basis").re;
    let c_const = fit.c_const().expect("constant in basis").re;
    Ok(vec![
        Check::rel(format!("q={q}{tag}:c_log"), c_log, q / (4.0 * PI), 1e-3),
        Check::abs(format!("q={q}{tag}:c_const"), c_const, coulomb_diag_const(&s, q)?.re, 1e-4),
    ])
}

/// Fit of `G(r, 0; −1) − 1/(4πr)` over `{log r, 1}` on `[1e−4, 1e−2]`.
fn coulomb_asym() -> Result<Outcome, Error> {
    let mut out = Outcome::default();
    for q in [1.0, -0.5] {
        out.checks.extend(coulomb_fit(q, &[BasisTerm::Log, BasisTerm::Const], "")?);
        // The remainder of G − 1/(4πr) − (q/4π) log r starts at r log r.
        out.supplementary.extend(coulomb_fit(
            q,
            &[BasisTerm::Log, BasisTerm::Const, BasisTerm::RLogR, BasisTerm::R],
            "+rlogr,r",
        )?);
    }
    Ok(out)
}

/// Log-slope of `G₄(r; −1) − G₄(r; −2)` against `(ζ₂ − ζ₁)/(8π²)`.
fn fourd_slope() -> Result<Outcome, Error> {
    let probe = zeta_independence_probe(
        &GreenModel::free(4)?,
        &real(-1.0),
        &real(-2.0),
        &log_radii(1e-2, 1e-5, 13)?,
        &QuadratureConfig::default(),
    )?;
    let expected = (-2.0 - -1.0) / (8.0 * PI * PI);
    Ok(Outcome {
        checks: vec![Check::rel("log_slope", probe.fitted_log_slope.re, expected, 1e-2)],
        supplementary: vec![Check::below("bounded_flag_false", probe.bounded as u8 as f64, 0.5)],
    })
}

/// `G(r; −1) − G(r; −4)` stays bounded in two and three dimensions.
fn zeta_indep() -> Result<Outcome, Error> {
    let radii = log_radii(1e-2, 1e-5, 13)?;
    let cfg = QuadratureConfig::default();
    let (z1, z2) = (real(-1.0), real(-4.0));
    let mut out = Outcome::default();
    for (name, model) in [
        ("free2d", GreenModel::free(2)?),
        ("free3d", GreenModel::free(3)?),
        ("coulomb3d_q1", GreenModel::coulomb(1.0)?),
    ] {
        let probe = zeta_independence_probe(&model, &z1, &z2, &radii, &cfg)?;
        out.checks.push(Check::below(format!("{name}:max_variation"), probe.max_variation, 1e-3));
        out.supplementary.push(Check::above(format!("{name}:bounded_flag"), probe.bounded as u8 as f64, 0.5));
        if name == "free3d" {
            // D → (κ₂ − κ₁)/(4π) with κ = √(−ζ).
            let expected = (z2.kappa() - z1.kappa()).re / (4.0 * PI);
            out.checks.push(Check::abs(format!("{name}:limit"), probe.limit.re, expected, 1e-6));
        }
    }
    Ok(out)
}

/// `|G| 4π|x − y| → 1` along the field axis and across it, and the phase of
/// `G` is the gauge phase.
fn magnetic_sing() -> Result<Outcome, Error> {
    let (xi, s) = (1.0, real(-1.0));
    let model = GreenModel::landau(xi)?;
    let cfg = QuadratureConfig::default();
    let q = landau_q(&s, xi)?.re;
    let base = p3([0.3, -0.2, 0.1]);
    let mut out = Outcome::default();
    for (label, e) in [("axis", [0.0, 0.0, 1.0]), ("transverse", [1.0, 0.0, 0.0])] {
        for r in [1e-3, 1e-4] {
            let x = base.add(&p3(e).scale(r))?;
            let g = green(&model, &x, &base, &s, &cfg)?.value;
            let ratio = g.norm() * 4.0 * PI * r;
            let name = format!("{label}:r={r:e}");
            if r == 1e-3 {
                out.checks.push(Check::abs(format!("{name}:modulus"), ratio, 1.0, 1e-3));
            } else {
                out.supplementary.push(Check::abs(format!("{name}:modulus"), ratio, 1.0, 1e-3));
            }
            // First-order term of |G|·4πr − 1 is 4πr·Q.
            out.supplementary.push(Check::abs(
                format!("{name}:modulus_minus_first_order"),
                ratio - 1.0,
                4.0 * PI * r * q,
                1e-5,
            ));
            let phase = landau_phase(&x, &base, xi);
            out.checks.push(Check::abs(format!("{name}:phase"), (g / g.norm() - phase).norm(), 0.0, 1e-12));
        }
    }
    let (x, y) = (p3([0.7, -0.4, 0.2]), p3([-0.5, 0.9, -0.3]));
    let g = green(&model, &x, &y, &s, &cfg)?.value;
    out.checks.push(Check::abs("separated:phase", (g / g.norm() - landau_phase(&x, &y, xi)).norm(), 0.0, 1e-12));
    Ok(out)
}

/// Slope of `log|G(0, y)|` against `log y` on `[10, 40]` for `ζ = i`, `ω = 1`.
fn invosc_decay() -> Result<Outcome, Error> {
    let model = GreenModel::invosc(1.0)?;
    let s = SpectralPoint::new(Complex64::new(0.0, 1.0))?;
    let cfg = QuadratureConfig::default();
    let ys = log_radii(40.0, 10.0, 16)?;
    let pts = ys
        .iter()
        .map(|&y| {
            let g = green(&model, &Point::origin(1), &Point::new(&[y])?, &s, &cfg)?;
            Ok((y.ln(), g.value.norm().ln()))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let n = pts.len() as f64;
    let (mx, my) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / n, b + y / n));
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    Ok(Outcome { checks: vec![Check::rel("log_slope", slope, -1.5, 2e-2)], ..Outcome::default() })
}

/// One point in three dimensions with `α = −1`: `E = −16π²`.
fn krein_single() -> Result<Outcome, Error> {
    let alpha = -1.0;
    let system = KreinSystem::new(GreenModel::free(3)?, vec![Point::origin(3)], vec![alpha])?;
    let roots = bound_states(&system, (-400.0, -1e-3), 1e-10, &KreinOptions::default())?;
    // Independent scalar root of −√(−E)/(4π) = α.
    let f = |e: f64| -(-e).sqrt() / (4.0 * PI) - alpha;
    let (mut a, mut b) = (-400.0, -1e-3);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if f(m) * f(a) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let scalar = 0.5 * (a + b);
    let energy = roots.first().map_or(f64::NAN, |r| r.energy);
    Ok(Outcome {
        checks: vec![
            Check::abs("root_count", roots.len() as f64, 1.0, 0.0),
            Check::abs("closed_form", energy, -16.0 * PI * PI, 1e-8),
            Check::abs("scalar_bisection", energy, scalar, 1e-8),
        ],
        ..Outcome::default()
    })
}

/// Library values against the frozen oracle fixture.
fn oracle_suite() -> Result<Outcome, Error> {
    let fixture = oracles::load();
    let checks = fixture
        .entries
        .par_iter()
        .map(|e| {
            let got = oracles::evaluate(&e.op, &e.args)?;
            let deviation = e.deviation(got);
            Ok(Check {
                name: e.id.clone(),
                value: got.re,
                reference: e.value[0],
                delta: deviation,
                tolerance: e.tol,
                passed: deviation <= e.tol,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Outcome { checks, ..Outcome::default() })
}
