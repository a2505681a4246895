//! Green functions of the exemplar operators.
//!
//! All kernels use units with `ħ = 2m = 1`, so the free operator is `−Δ` and
//! `G(x, y; ζ)` is the kernel of `(H − ζ)⁻¹`.

mod coulomb;
mod free;
mod invosc;
mod landau;

pub use coulomb::{coulomb_diag_const, green_coulomb};
pub use free::{free_diag_const, green_free};
pub use invosc::green_invosc;
pub use landau::{
    green_landau, landau_f, landau_f_axis, landau_f_direct, landau_phase, landau_q, landau_spectrum_threshold,
};

use core::fmt;

use crate::quadrature::QuadratureConfig;
use crate::{ComplexArg, Error, Result};

/// A spectral parameter `ζ` together with `κ = √(−ζ)` on the principal branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    zeta: ComplexArg,
    kappa: ComplexArg,
}

impl SpectralPoint {
    pub fn new(zeta: ComplexArg) -> Result<Self> {
        crate::ensure_finite(zeta, "spectral parameter")?;
        // Normalise −0.0 so that real ζ < 0 gives a real κ > 0.
        let minus = ComplexArg::new(-zeta.re, if zeta.im == 0.0 { 0.0 } else { -zeta.im });
        Ok(Self { zeta, kappa: minus.sqrt() })
    }

    pub fn real(energy: f64) -> Result<Self> {
        Self::new(ComplexArg::new(energy, 0.0))
    }

    pub fn zeta(&self) -> ComplexArg {
        self.zeta
    }

    pub fn kappa(&self) -> ComplexArg {
        self.kappa
    }

    pub fn conj(&self) -> Self {
        Self::new(self.zeta.conj()).expect("conjugate of a finite value is finite")
    }

    /// True when `ζ ∈ [0, ∞)`, the spectrum of `−Δ`.
    pub fn on_nonnegative_axis(&self) -> bool {
        self.zeta.im == 0.0 && self.zeta.re >= 0.0
    }
}

/// The exemplar operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GreenModel {
    /// `−Δ` in `dim ∈ {1, 2, 3, 4}` dimensions.
    Free { dim: usize },
    /// `−Δ + q/|x|` in three dimensions.
    Coulomb3D { q: f64 },
    /// Three-dimensional Landau Hamiltonian with flux density `ξ` along the third axis.
    Landau3D { xi: f64 },
    /// `−d²/dx² − ω²x²/4`.
    InvOsc1D { omega: f64 },
}

impl GreenModel {
    pub fn free(dim: usize) -> Result<Self> {
        let m = GreenModel::Free { dim };
        m.validate()?;
        Ok(m)
    }

    pub fn coulomb(q: f64) -> Result<Self> {
        let m = GreenModel::Coulomb3D { q };
        m.validate()?;
        Ok(m)
    }

    pub fn landau(xi: f64) -> Result<Self> {
        let m = GreenModel::Landau3D { xi };
        m.validate()?;
        Ok(m)
    }

    pub fn invosc(omega: f64) -> Result<Self> {
        let m = GreenModel::InvOsc1D { omega };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            GreenModel::Free { dim } if !(1..=4).contains(&dim) => {
                Err(Error::domain(alloc::format!("free model dimension {dim} not in 1..=4")))
            }
            GreenModel::Coulomb3D { q } if !q.is_finite() => Err(Error::domain("Coulomb coupling must be finite")),
            GreenModel::Landau3D { xi } if !(xi.is_finite() && xi != 0.0) => {
                Err(Error::domain("flux density must be finite and non-zero"))
            }
            GreenModel::InvOsc1D { omega } if !(omega.is_finite() && omega > 0.0) => {
                Err(Error::domain("oscillator frequency must be positive"))
            }
            _ => Ok(()),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match *self {
            GreenModel::Free { dim } => dim,
            GreenModel::Coulomb3D { .. } | GreenModel::Landau3D { .. } => 3,
            GreenModel::InvOsc1D { .. } => 1,
        }
    }

    /// Short lowercase name, e.g. `free3d` or `landau3d`.
    pub fn tag(&self) -> &'static str {
        match *self {
            GreenModel::Free { dim: 1 } => "free1d",
            GreenModel::Free { dim: 2 } => "free2d",
            GreenModel::Free { dim: 3 } => "free3d",
            GreenModel::Free { .. } => "free4d",
            GreenModel::Coulomb3D { .. } => "coulomb3d",
            GreenModel::Landau3D { .. } => "landau3d",
            GreenModel::InvOsc1D { .. } => "invosc1d",
        }
    }

    /// Checks that `s` lies in the region where the evaluators are defined.
    pub fn check_spectral_point(&self, s: &SpectralPoint) -> Result<()> {
        match *self {
            GreenModel::Free { .. } | GreenModel::Coulomb3D { .. } => {
                if s.on_nonnegative_axis() {
                    return Err(Error::domain(alloc::format!("ζ = {} lies on the continuous spectrum [0, ∞)", s.zeta)));
                }
            }
            GreenModel::Landau3D { xi } => {
                let threshold = landau_spectrum_threshold(xi);
                if !(s.zeta.re < threshold) {
                    return Err(Error::domain(alloc::format!(
                        "Re ζ = {} must lie below 2π|ξ| = {threshold}",
                        s.zeta.re
                    )));
                }
            }
            GreenModel::InvOsc1D { .. } => {
                if !(s.zeta.im > 0.0) {
                    return Err(Error::domain("the inverted oscillator needs Im ζ > 0"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for GreenModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GreenModel::Free { .. } => write!(f, "{}", self.tag()),
            GreenModel::Coulomb3D { q } => write!(f, "coulomb3d(q={q})"),
            GreenModel::Landau3D { xi } => write!(f, "landau3d(xi={xi})"),
            GreenModel::InvOsc1D { omega } => write!(f, "invosc1d(omega={omega})"),
        }
    }
}

/// A point in 1 to 4 dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    coords: [f64; 4],
    dim: usize,
}

impl Point {
    pub fn new(coords: &[f64]) -> Result<Self> {
        if !(1..=4).contains(&coords.len()) {
            return Err(Error::domain(alloc::format!("points need 1 to 4 coordinates, got {}", coords.len())));
        }
        if coords.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("point coordinates must be finite"));
        }
        let mut buf = [0.0; 4];
        buf[..coords.len()].copy_from_slice(coords);
        Ok(Self { coords: buf, dim: coords.len() })
    }

    pub fn origin(dim: usize) -> Self {
        Self::new(&[0.0; 4][..dim.clamp(1, 4)]).expect("valid dimension")
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords[..self.dim]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> f64 {
        self.coords().iter().fold(0.0, |acc: f64, v| acc.hypot(*v))
    }

    /// `self − other`; both points must have the same dimension.
    pub fn sub(&self, other: &Point) -> Result<Point> {
        self.same_dim(other)?;
        let mut out = *self;
        for (o, v) in out.coords.iter_mut().zip(other.coords.iter()) {
            *o -= v;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        self.same_dim(other)?;
        let mut out = *self;
        for (o, v) in out.coords.iter_mut().zip(other.coords.iter()) {
            *o += v;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: f64) -> Point {
        let mut out = *self;
        for o in out.coords.iter_mut() {
            *o *= factor;
        }
        out
    }

    pub fn distance(&self, other: &Point) -> Result<f64> {
        Ok(self.sub(other)?.norm())
    }

    fn same_dim(&self, other: &Point) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::domain(alloc::format!("dimension mismatch: {} vs {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub(crate) fn require_dim(&self, dim: usize) -> Result<()> {
        if self.dim != dim {
            return Err(Error::domain(alloc::format!("expected a {dim}-dimensional point, got {}", self.dim)));
        }
        Ok(())
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Series,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Series => "series",
            Method::Quadrature => "quadrature",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: ComplexArg,
    pub abs_error: f64,
    pub method: Method,
}

/// `G(x, y; ζ)` for any of the exemplar models.
///
/// `cfg` is only consulted by the quadrature-based Landau evaluator.
pub fn green(
    model: &GreenModel,
    x: &Point,
    y: &Point,
    s: &SpectralPoint,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    model.validate()?;
    let dim = model.ambient_dim();
    x.require_dim(dim)?;
    y.require_dim(dim)?;
    match *model {
        GreenModel::Free { dim } => {
            let r = x.distance(y)?;
            green_free(dim, r, s)
        }
        GreenModel::Coulomb3D { q } => green_coulomb(x, y, s, q),
        GreenModel::Landau3D { xi } => green_landau(x, y, s, xi, cfg),
        GreenModel::InvOsc1D { omega } => green_invosc(x.coords()[0], y.coords()[0], s, omega),
    }
}
