use alloc::vec::Vec;

use crate::linalg::least_squares;
use crate::{ComplexArg, Error, Result};

/// Above this (column-equilibrated) condition number a fit is rejected.
pub const MAX_CONDITION: f64 = 1e10;

/// Functions of `r` available to singularity fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisTerm {
    Inv2,
    Inv1,
    Log,
    Const,
    RLogR,
    R,
    R2,
    R2LogR,
}

impl BasisTerm {
    pub const ALL: [BasisTerm; 8] = [
        BasisTerm::Inv2,
        BasisTerm::Inv1,
        BasisTerm::Log,
        BasisTerm::Const,
        BasisTerm::RLogR,
        BasisTerm::R,
        BasisTerm::R2,
        BasisTerm::R2LogR,
    ];

    pub fn eval(&self, r: f64) -> f64 {
        match self {
            BasisTerm::Inv2 => 1.0 / (r * r),
            BasisTerm::Inv1 => 1.0 / r,
            BasisTerm::Log => r.ln(),
            BasisTerm::Const => 1.0,
            BasisTerm::RLogR => r * r.ln(),
            BasisTerm::R => r,
            BasisTerm::R2 => r * r,
            BasisTerm::R2LogR => r * r * r.ln(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BasisTerm::Inv2 => "inv2",
            BasisTerm::Inv1 => "inv1",
            BasisTerm::Log => "log",
            BasisTerm::Const => "const",
            BasisTerm::RLogR => "rlogr",
            BasisTerm::R => "r",
            BasisTerm::R2 => "r2",
            BasisTerm::R2LogR => "r2logr",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|t| t.name() == name)
    }
}

/// Least-squares coefficients of a singular expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityFit {
    pub terms: Vec<BasisTerm>,
    pub coeffs: Vec<ComplexArg>,
    /// One-sigma uncertainty of each coefficient from the residual scatter.
    pub std_errors: Vec<f64>,
    /// RMS of the fit residuals.
    pub residual: f64,
    pub radii_used: Vec<f64>,
    pub condition: f64,
}

impl SingularityFit {
    pub fn coeff(&self, term: BasisTerm) -> Option<ComplexArg> {
        self.terms.iter().position(|t| *t == term).map(|i| self.coeffs[i])
    }

    pub fn c_inv2(&self) -> Option<ComplexArg> {
        self.coeff(BasisTerm::Inv2)
    }

    pub fn c_inv1(&self) -> Option<ComplexArg> {
        self.coeff(BasisTerm::Inv1)
    }

    pub fn c_log(&self) -> Option<ComplexArg> {
        self.coeff(BasisTerm::Log)
    }

    pub fn c_const(&self) -> Option<ComplexArg> {
        self.coeff(BasisTerm::Const)
    }
}

pub(crate) struct RawFit {
    pub coeffs: Vec<ComplexArg>,
    pub std_errors: Vec<f64>,
    /// Bound on the change of each coefficient per unit error in every sample.
    pub noise_gain: Vec<f64>,
    pub residual: f64,
    pub condition: f64,
}

pub(crate) fn least_squares_fit(points: &[(f64, ComplexArg)], terms: &[BasisTerm]) -> Result<RawFit> {
    let (m, p) = (points.len(), terms.len());
    if p == 0 {
        return Err(Error::domain("empty fit basis"));
    }
    if m < p + 1 {
        return Err(Error::domain(alloc::format!("{p} basis functions need at least {} samples, got {m}", p + 1)));
    }
    for (i, t) in terms.iter().enumerate() {
        if terms[..i].contains(t) {
            return Err(Error::domain(alloc::format!("basis term {} repeated", t.name())));
        }
    }
    let design: Vec<f64> = points.iter().flat_map(|(r, _)| terms.iter().map(move |t| t.eval(*r))).collect();
    let rhs: Vec<ComplexArg> = points.iter().map(|(_, v)| *v).collect();
    let ls = least_squares(&design, m, p, &rhs).ok_or(Error::IllConditioned { condition: f64::INFINITY })?;
    if !(ls.condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned { condition: ls.condition });
    }
    let ssr: f64 = ls.residuals.iter().map(|r| r.norm_sqr()).sum();
    let residual = (ssr / m as f64).sqrt();
    let sigma = if m > p { (ssr / (m - p) as f64).sqrt() } else { 0.0 };
    let std_errors = ls.covariance_diag.iter().map(|c| sigma * c.sqrt()).collect();
    let noise_gain = ls.covariance_diag.iter().map(|c| (m as f64 * c).sqrt()).collect();
    Ok(RawFit { coeffs: ls.coeffs, std_errors, noise_gain, residual, condition: ls.condition })
}

/// Linear least squares of `samples = (r, value)` over the chosen basis.
///
/// Needs more samples than basis functions, distinct radii spanning at least
/// two decades, and a well-conditioned design.
pub fn fit_singularity(samples: &[(f64, ComplexArg)], terms: &[BasisTerm]) -> Result<SingularityFit> {
    let mut points = samples.to_vec();
    if points.iter().any(|(r, v)| !(*r > 0.0 && r.is_finite()) || !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::domain("samples need positive radii and finite values"));
    }
    points.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
    if points.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::domain("sample radii must be distinct"));
    }
    if points.len() < 4 {
        return Err(Error::domain("at least four samples are required"));
    }
    let (hi, lo) = (points[0].0, points[points.len() - 1].0);
    if hi / lo < 100.0 {
        return Err(Error::domain(alloc::format!("radii span {hi:e}..{lo:e}, less than two decades")));
    }
    let raw = least_squares_fit(&points, terms)?;
    Ok(SingularityFit {
        terms: terms.to_vec(),
        coeffs: raw.coeffs,
        std_errors: raw.std_errors,
        residual: raw.residual,
        radii_used: points.iter().map(|p| p.0).collect(),
        condition: raw.condition,
    })
}
