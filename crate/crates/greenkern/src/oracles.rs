//! Frozen reference values and their evaluation with the main
//! implementations.
//!
//! The values in `fixtures/oracles.json` come from independent oracles
//! (long series, shifted Euler–Maclaurin sums, double-exponential
//! quadrature of integral representations, closed forms) that live in the
//! crate's test code, which can also regenerate the file.

use greenkern_core::krein::{bound_states, KreinOptions, KreinSystem};
use greenkern_core::models::{
    coulomb_diag_const, free_diag_const, green_coulomb, green_free, landau_f, landau_q, GreenModel, Point,
    SpectralPoint,
};
use greenkern_core::quadrature::{integrate_halfline, EndpointHints, QuadratureConfig};
use greenkern_core::specfun::{
    bessel_k, digamma, hurwitz_zeta_half, kummer_phi, tricomi_psi, weber_u, whittaker_m, whittaker_m_prime,
    whittaker_w, whittaker_w_prime, BesselOrder,
};
use greenkern_core::{Complex64, Error};
use serde::{Deserialize, Serialize};

pub const FIXTURE: &str = include_str!("../fixtures/oracles.json");

/// How an entry's tolerance is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TolKind {
    Abs,
    Rel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub id: String,
    pub op: String,
    pub args: Vec<f64>,
    pub value: [f64; 2],
    pub tol: f64,
    pub tol_kind: TolKind,
    pub oracle: String,
}

impl OracleEntry {
    pub fn expected(&self) -> Complex64 {
        Complex64::new(self.value[0], self.value[1])
    }

    /// Deviation measured in the entry's own tolerance convention.
    pub fn deviation(&self, got: Complex64) -> f64 {
        let d = (got - self.expected()).norm();
        match self.tol_kind {
            TolKind::Abs => d,
            TolKind::Rel => d / self.expected().norm().max(f64::MIN_POSITIVE),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleFixture {
    pub entries: Vec<OracleEntry>,
}

pub fn load() -> OracleFixture {
    serde_json::from_str(FIXTURE).expect("embedded oracle fixture parses")
}

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn point(v: &[f64]) -> Result<Point, Error> {
    Point::new(v)
}

fn spectral(re: f64, im: f64) -> Result<SpectralPoint, Error> {
    SpectralPoint::new(cx(re, im))
}

/// Evaluates `op` on `args` with the library implementation.
pub fn evaluate(op: &str, args: &[f64]) -> Result<Complex64, Error> {
    let want = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::domain(format!("{op} takes {n} arguments, got {}", args.len())))
        }
    };
    let cfg = QuadratureConfig::default();
    match op {
        "digamma" => {
            want(2)?;
            digamma(cx(args[0], args[1]))
        }
        "bessel_k" => {
            want(3)?;
            let order = [(0.0, BesselOrder::Zero), (1.0, BesselOrder::One), (0.5, BesselOrder::Half)]
                .into_iter()
                .find(|(o, _)| *o == args[0])
                .map(|(_, order)| order)
                .ok_or_else(|| Error::domain(format!("unsupported Bessel order {}", args[0])))?;
            bessel_k(order, cx(args[1], args[2]))
        }
        "kummer_phi" | "tricomi_psi" | "weber_u" => {
            want(4)?;
            let (a, z) = (cx(args[0], args[1]), cx(args[2], args[3]));
            match op {
                "kummer_phi" => kummer_phi(a, z),
                "tricomi_psi" => tricomi_psi(a, z),
                _ => weber_u(a, z),
            }
        }
        "whittaker_m" | "whittaker_m_prime" | "whittaker_w" | "whittaker_w_prime" => {
            want(4)?;
            let (k, z) = (cx(args[0], args[1]), cx(args[2], args[3]));
            match op {
                "whittaker_m" => whittaker_m(k, z),
                "whittaker_m_prime" => whittaker_m_prime(k, z),
                "whittaker_w" => whittaker_w(k, z),
                _ => whittaker_w_prime(k, z),
            }
        }
        "hurwitz_zeta_half" => {
            want(2)?;
            hurwitz_zeta_half(cx(args[0], args[1]))
        }
        "gaussian_pair" => {
            // ∫₀^∞ exp(−bt² − c/t²) dt
            want(2)?;
            let (b, c) = (args[0], args[1]);
            let cfg = cfg.with_tolerances(1e-12, 1e-15);
            integrate_halfline(|t| cx((-b * t * t - c / (t * t)).exp(), 0.0), &cfg, EndpointHints::essential_zero(c))
                .map(|r| r.value)
        }
        "green_free" => {
            want(4)?;
            green_free(args[0] as usize, args[1], &spectral(args[2], args[3])?).map(|r| r.value)
        }
        "free_diag_const" => {
            want(3)?;
            free_diag_const(args[0] as usize, &spectral(args[1], args[2])?)
        }
        "green_coulomb" => {
            want(9)?;
            let s = spectral(args[6], args[7])?;
            green_coulomb(&point(&args[0..3])?, &point(&args[3..6])?, &s, args[8]).map(|r| r.value)
        }
        "coulomb_diag_const" => {
            want(3)?;
            coulomb_diag_const(&spectral(args[0], args[1])?, args[2])
        }
        "landau_f" => {
            want(6)?;
            landau_f(&point(&args[0..3])?, &spectral(args[3], args[4])?, args[5], &cfg).map(|r| r.value)
        }
        "landau_q" => {
            want(3)?;
            landau_q(&spectral(args[0], args[1])?, args[2])
        }
        "krein_single_3d" => {
            // Lowest bound state of one point with inverse coupling α.
            want(1)?;
            let system = KreinSystem::new(GreenModel::free(3)?, vec![Point::origin(3)], vec![args[0]])?;
            let e = -16.0 * std::f64::consts::PI.powi(2) * args[0] * args[0];
            let roots = bound_states(&system, (2.0 * e, 0.5 * e), 1e-11, &KreinOptions::default())?;
            roots.first().map(|b| cx(b.energy, 0.0)).ok_or_else(|| Error::domain("no bound state found"))
        }
        other => Err(Error::domain(format!("unknown oracle operation {other:?}"))),
    }
}
