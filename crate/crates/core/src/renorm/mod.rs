//! Diagonal singularities and renormalized Green functions `G − S`.

mod fit;

pub use fit::{fit_singularity, BasisTerm, SingularityFit};

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::models::{
    coulomb_diag_const, free_diag_const, green, landau_phase, landau_q, GreenModel, Point, SpectralPoint,
};
use crate::quadrature::QuadratureConfig;
use crate::{ComplexArg, Error, Result};

/// `S(r)`: `(1/2π) log(1/r)` in two dimensions, `1/(4πr)` in three.
pub fn standard_singularity(dim: usize, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(alloc::format!("distance must be positive, got {r}")));
    }
    match dim {
        2 => Ok(-r.ln() / (2.0 * PI)),
        3 => Ok(1.0 / (4.0 * PI * r)),
        _ => Err(Error::domain(alloc::format!("no standard diagonal singularity in dimension {dim}"))),
    }
}

/// `exp(iB(x₁y₂ − x₂y₁)/2)/(4π|x − y|)`: the three-dimensional singularity
/// dressed with the symmetric-gauge phase of a field `B` along the third axis.
pub fn magnetic_singularity(x: &Point, y: &Point, b: f64) -> Result<ComplexArg> {
    x.require_dim(3)?;
    y.require_dim(3)?;
    let r = x.distance(y)?;
    if r == 0.0 {
        return Err(Error::domain("the singularity is infinite at x = y"));
    }
    // B = 2πξ turns this into the Landau phase.
    Ok(landau_phase(x, y, b / (2.0 * PI)) / (4.0 * PI * r))
}

/// Singular part subtracted from `G(x, y)` before extrapolating to `x = y`.
#[derive(Debug, Clone, Copy)]
pub enum Singularity {
    /// Nothing is subtracted (one-dimensional kernels are continuous).
    None,
    Standard {
        dim: usize,
    },
    Magnetic {
        field: f64,
    },
    /// `1/(4πr) + (q/4π) log r`, the Coulomb singularity including its
    /// logarithmic term.
    CoulombLog {
        q: f64,
    },
    Custom(fn(&Point, &Point) -> Result<ComplexArg>),
}

impl Singularity {
    /// The singularity matching `model`, if one exists.
    pub fn for_model(model: &GreenModel) -> Result<Self> {
        match *model {
            GreenModel::Free { dim: 1 } | GreenModel::InvOsc1D { .. } => Ok(Singularity::None),
            GreenModel::Free { dim } if dim == 2 || dim == 3 => Ok(Singularity::Standard { dim }),
            GreenModel::Free { dim } => {
                Err(Error::domain(alloc::format!("no ζ-independent diagonal singularity in dimension {dim}")))
            }
            GreenModel::Coulomb3D { q } => Ok(Singularity::CoulombLog { q }),
            GreenModel::Landau3D { xi } => Ok(Singularity::Magnetic { field: 2.0 * PI * xi }),
        }
    }

    pub fn eval(&self, x: &Point, y: &Point) -> Result<ComplexArg> {
        let r = x.distance(y)?;
        match *self {
            Singularity::None => Ok(ComplexArg::new(0.0, 0.0)),
            Singularity::Standard { dim } => Ok(ComplexArg::new(standard_singularity(dim, r)?, 0.0)),
            Singularity::Magnetic { field } => magnetic_singularity(x, y, field),
            Singularity::CoulombLog { q } => {
                Ok(ComplexArg::new(standard_singularity(3, r)? + q / (4.0 * PI) * r.ln(), 0.0))
            }
            Singularity::Custom(f) => f(x, y),
        }
    }
}

/// Renormalized diagonal value with its extrapolation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenormValue {
    pub value: ComplexArg,
    pub extrapolation_error: f64,
}

/// One near-diagonal sample `G(x + r e, x)` and the subtracted `S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenormSample {
    pub r: f64,
    pub green: ComplexArg,
    pub green_error: f64,
    pub singular: ComplexArg,
}

impl RenormSample {
    pub fn regular(&self) -> ComplexArg {
        self.green - self.singular
    }
}

/// `n` log-spaced radii from `hi` down to `lo`.
pub fn log_radii(hi: f64, lo: f64, n: usize) -> Result<Vec<f64>> {
    if !(hi > lo && lo > 0.0 && hi.is_finite()) || n < 2 {
        return Err(Error::domain("need hi > lo > 0 and at least two radii"));
    }
    let (a, b) = (hi.ln(), lo.ln());
    Ok((0..n)
        .map(|k| {
            if k == 0 {
                hi
            } else if k == n - 1 {
                lo
            } else {
                (a + (b - a) * k as f64 / (n - 1) as f64).exp()
            }
        })
        .collect())
}

/// Twelve radii from `1e-1` down to `1e-5`.
pub fn default_radii() -> Vec<f64> {
    log_radii(1e-1, 1e-5, 12).expect("valid default grid")
}

pub(crate) fn check_radii(radii: &[f64], min_len: usize) -> Result<()> {
    if radii.len() < min_len {
        return Err(Error::domain(alloc::format!("need at least {min_len} radii, got {}", radii.len())));
    }
    if radii.iter().any(|r| !(*r > 0.0 && r.is_finite())) {
        return Err(Error::domain("radii must be positive and finite"));
    }
    if radii.windows(2).any(|w| !(w[0] > w[1])) {
        return Err(Error::domain("radii must be strictly decreasing"));
    }
    Ok(())
}

/// Unit vector along the first axis, or along the field for `axis = true`.
pub fn direction(dim: usize, axis: bool) -> Point {
    let mut v = [0.0; 4];
    v[if axis && dim == 3 { 2 } else { 0 }] = 1.0;
    Point::new(&v[..dim]).expect("valid direction")
}

/// Samples `G(x + r e, x; ζ)` and `S(x + r e, x)` for each radius.
pub fn renorm_samples(
    model: &GreenModel,
    x: &Point,
    e: &Point,
    s: &SpectralPoint,
    radii: &[f64],
    singularity: &Singularity,
    cfg: &QuadratureConfig,
) -> Result<Vec<RenormSample>> {
    radii.iter().map(|&r| renorm_sample(model, x, e, s, r, singularity, cfg)).collect()
}

/// A single entry of [`renorm_samples`].
pub fn renorm_sample(
    model: &GreenModel,
    x: &Point,
    e: &Point,
    s: &SpectralPoint,
    r: f64,
    singularity: &Singularity,
    cfg: &QuadratureConfig,
) -> Result<RenormSample> {
    let y = x.add(&e.scale(r / e.norm()))?;
    let g = green(model, &y, x, s, cfg)?;
    Ok(RenormSample { r, green: g.value, green_error: g.abs_error, singular: singularity.eval(&y, x)? })
}

/// Remainder terms assumed in `G − S` for extrapolation to `r = 0`.
pub fn correction_terms(model: &GreenModel) -> &'static [BasisTerm] {
    match model {
        GreenModel::Coulomb3D { .. } => &[BasisTerm::RLogR, BasisTerm::R],
        _ => &[BasisTerm::R, BasisTerm::R2],
    }
}

/// Extrapolation of `G − S` to `r = 0` assuming a constant plus
/// `corrections`.
///
/// The constant is fitted on sliding windows of `corrections.len() + 2`
/// consecutive radii, from large to small `r`. As in a Richardson table the
/// estimate is taken where consecutive windows agree best, before sample
/// noise takes over at the smallest radii; that disagreement is the error
/// estimate. Window estimates that drift apart ever faster towards `r = 0`
/// mean `G − S` is unbounded and give [`Error::ExtrapolationDiverged`].
pub fn extrapolate(samples: &[RenormSample], corrections: &[BasisTerm]) -> Result<RenormValue> {
    let mut terms = Vec::with_capacity(corrections.len() + 1);
    terms.push(BasisTerm::Const);
    terms.extend_from_slice(corrections);
    let width = terms.len() + 1;
    if samples.len() < width + 2 {
        return Err(Error::domain(alloc::format!(
            "need at least {} samples to extrapolate with {} terms",
            width + 2,
            terms.len()
        )));
    }
    let points: Vec<(f64, ComplexArg)> = samples.iter().map(|s| (s.r, s.regular())).collect();
    let noise = samples.iter().fold(0.0f64, |m, s| m.max(s.green_error));
    let mut estimates = Vec::new();
    let mut gains = Vec::new();
    for w in points.windows(width) {
        let f = fit::least_squares_fit(w, &terms)?;
        estimates.push(f.coeffs[0]);
        gains.push(f.noise_gain[0]);
    }
    let diffs: Vec<f64> = estimates.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    let scale = estimates.iter().fold(0.0f64, |m, v| m.max(v.norm()));
    if diffs.len() >= 2 {
        let first = diffs[0];
        let last = diffs[diffs.len() - 1];
        let significant = 1e-6 * (1.0 + scale) + 1e3 * noise;
        if last > significant && last >= 0.5 * first {
            return Err(Error::ExtrapolationDiverged(alloc::format!(
                "window estimates keep moving as r → 0: first step {first:.3e}, last step {last:.3e}"
            )));
        }
    }
    // Prefer smaller radii on ties.
    let best = (0..diffs.len())
        .rev()
        .min_by(|&a, &b| diffs[a].partial_cmp(&diffs[b]).unwrap_or(core::cmp::Ordering::Equal))
        .expect("at least two windows");
    let neighbour = [best.checked_sub(1), Some(best + 1).filter(|&j| j < diffs.len())]
        .iter()
        .flatten()
        .map(|&j| diffs[j])
        .fold(f64::INFINITY, f64::min);
    let value = estimates[best + 1];
    let spread = if neighbour.is_finite() { diffs[best].max(0.1 * neighbour) } else { diffs[best] };
    let extrapolation_error = spread + noise * gains[best + 1] + 4.0 * f64::EPSILON * value.norm();
    Ok(RenormValue { value, extrapolation_error })
}

/// `G^ren(x, x; ζ)` by near-diagonal sampling and extrapolation.
///
/// Samples run along the first coordinate axis. For the Landau model both the
/// field axis and the first axis are probed; the two limits must agree within
/// their combined error, and the reported error covers their difference.
pub fn renorm_diagonal(
    model: &GreenModel,
    x: &Point,
    s: &SpectralPoint,
    radii: &[f64],
    singularity: &Singularity,
    cfg: &QuadratureConfig,
) -> Result<RenormValue> {
    check_radii(radii, 4)?;
    model.validate()?;
    model.check_spectral_point(s)?;
    let dim = model.ambient_dim();
    x.require_dim(dim)?;
    let corrections = correction_terms(model);
    let first = {
        let samples = renorm_samples(model, x, &direction(dim, false), s, radii, singularity, cfg)?;
        extrapolate(&samples, corrections)?
    };
    if !matches!(model, GreenModel::Landau3D { .. }) {
        return Ok(first);
    }
    let samples = renorm_samples(model, x, &direction(dim, true), s, radii, singularity, cfg)?;
    let axis = extrapolate(&samples, corrections)?;
    let gap = (axis.value - first.value).norm();
    let combined = axis.extrapolation_error + first.extrapolation_error;
    if gap > 10.0 * combined.max(1e-9) {
        return Err(Error::ExtrapolationDiverged(alloc::format!(
            "axis and transverse limits differ: {} vs {} (gap {gap:.3e})",
            axis.value,
            first.value
        )));
    }
    Ok(RenormValue { value: axis.value, extrapolation_error: axis.extrapolation_error.max(gap) })
}

/// Closed-form renormalized diagonal, where one is known. The convention
/// matches [`Singularity::for_model`].
pub fn diagonal_closed_form(model: &GreenModel, s: &SpectralPoint) -> Option<Result<ComplexArg>> {
    match *model {
        GreenModel::Free { dim } if dim <= 3 => Some(free_diag_const(dim, s)),
        GreenModel::Coulomb3D { q } => Some(coulomb_diag_const(s, q)),
        GreenModel::Landau3D { xi } => Some(landau_q(s, xi)),
        _ => None,
    }
}

/// Outcome of [`zeta_independence_probe`].
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaProbe {
    /// Whether `D(r) = G(r; ζ₁) − G(r; ζ₂)` stays bounded as `r → 0`.
    pub bounded: bool,
    /// Fitted coefficient of `log r` in `D`.
    pub fitted_log_slope: ComplexArg,
    /// Uncertainty of the fitted slope.
    pub slope_error: f64,
    /// `max |D(rᵢ) − D(rⱼ)|` over the radii.
    pub max_variation: f64,
    /// Fitted constant term, the limit of `D` when it is bounded.
    pub limit: ComplexArg,
    pub limit_error: f64,
    pub samples: Vec<(f64, ComplexArg)>,
}

/// Compares two spectral points near the diagonal at the origin.
///
/// `D` is fitted over `{log r, 1, r, r log r, r², r² log r}`. The difference is
/// reported bounded when the variation attributable to the `log r` term over
/// the sampled range is within ten times its own uncertainty (with a floor
/// of `1e-9 (1 + |limit|)`).
pub fn zeta_independence_probe(
    model: &GreenModel,
    z1: &SpectralPoint,
    z2: &SpectralPoint,
    radii: &[f64],
    cfg: &QuadratureConfig,
) -> Result<ZetaProbe> {
    check_radii(radii, 6)?;
    model.validate()?;
    model.check_spectral_point(z1)?;
    model.check_spectral_point(z2)?;
    let (hi, lo) = (radii[0], radii[radii.len() - 1]);
    if hi / lo < 100.0 {
        return Err(Error::domain("radii must span at least two decades"));
    }
    let dim = model.ambient_dim();
    let x = Point::origin(dim);
    let e = direction(dim, dim == 3 && matches!(model, GreenModel::Landau3D { .. }));
    let mut samples = Vec::with_capacity(radii.len());
    let mut noise = 0.0f64;
    for &r in radii {
        let y = x.add(&e.scale(r))?;
        let g1 = green(model, &y, &x, z1, cfg)?;
        let g2 = green(model, &y, &x, z2, cfg)?;
        noise = noise.max(g1.abs_error + g2.abs_error);
        samples.push((r, g1.value - g2.value));
    }
    let terms = [BasisTerm::Log, BasisTerm::Const, BasisTerm::R, BasisTerm::RLogR, BasisTerm::R2, BasisTerm::R2LogR];
    let fit = fit::least_squares_fit(&samples, &terms)?;
    let slope = fit.coeffs[0];
    let limit = fit.coeffs[1];
    let slope_error = fit.std_errors[0] + noise * fit.noise_gain[0];
    let limit_error = fit.std_errors[1] + noise * fit.noise_gain[1];
    let mut max_variation = 0.0f64;
    for (i, a) in samples.iter().enumerate() {
        for b in &samples[i + 1..] {
            max_variation = max_variation.max((a.1 - b.1).norm());
        }
    }
    let log_swing = slope.norm() * (hi / lo).ln();
    let bounded = log_swing < 10.0 * (slope_error * (hi / lo).ln()).max(1e-9 * (1.0 + limit.norm()));
    Ok(ZetaProbe { bounded, fitted_log_slope: slope, slope_error, max_variation, limit, limit_error, samples })
}
