//! Point interactions on a finite set `M` via the Krein resolvent formula.
//!
//! With `Q_mm(ζ) = G^ren(m, m; ζ)`, `Q_mn(ζ) = G(m, n; ζ)` and inverse
//! couplings `α`, the perturbed kernel is
//!
//! `G_M(x, y) = G(x, y) − Σ_{m,n} G(x, m) [(Q − diag α)⁻¹]_{mn} G(n, y)`
//!
//! and bound states are the energies where `Q(E) − diag α` is singular. For a
//! single point in three dimensions, `−√(−E)/(4π) = α` gives `E = −16π²α²`.

use alloc::vec::Vec;

use crate::linalg::ComplexMatrix;
use crate::models::{green, landau_spectrum_threshold, EvalResult, GreenModel, Point, SpectralPoint};
use crate::quadrature::QuadratureConfig;
use crate::renorm::{diagonal_closed_form, renorm_diagonal, Singularity};
use crate::{ComplexArg, Error, Result};

/// Base operator, point set and inverse couplings.
#[derive(Debug, Clone, PartialEq)]
pub struct KreinSystem {
    base: GreenModel,
    points: Vec<Point>,
    couplings: Vec<f64>,
}

impl KreinSystem {
    pub fn new(base: GreenModel, points: Vec<Point>, couplings: Vec<f64>) -> Result<Self> {
        base.validate()?;
        match base {
            GreenModel::Free { dim: 2 } | GreenModel::Free { dim: 3 } | GreenModel::Landau3D { .. } => {}
            other => {
                return Err(Error::domain(alloc::format!(
                    "point interactions need a free 2D/3D or Landau base, got {other}"
                )))
            }
        }
        if points.is_empty() {
            return Err(Error::domain("at least one interaction point is required"));
        }
        if points.len() != couplings.len() {
            return Err(Error::domain(alloc::format!("{} points but {} couplings", points.len(), couplings.len())));
        }
        if couplings.iter().any(|a| !a.is_finite()) {
            return Err(Error::domain("couplings must be finite"));
        }
        let dim = base.ambient_dim();
        for p in &points {
            p.require_dim(dim)?;
        }
        for (i, p) in points.iter().enumerate() {
            for q in &points[i + 1..] {
                if !(p.distance(q)? > 0.0) {
                    return Err(Error::domain("interaction points must be distinct"));
                }
            }
        }
        Ok(Self { base, points, couplings })
    }

    pub fn base(&self) -> &GreenModel {
        &self.base
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn couplings(&self) -> &[f64] {
        &self.couplings
    }

    /// Bottom of the unperturbed spectrum.
    pub fn spectrum_threshold(&self) -> f64 {
        match self.base {
            GreenModel::Landau3D { xi } => landau_spectrum_threshold(xi),
            _ => 0.0,
        }
    }
}

/// How the diagonal of `Q` is obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum DiagonalMode {
    /// Closed-form renormalized diagonal of the base model.
    ClosedForm,
    /// Near-diagonal sampling and extrapolation over these radii.
    Extrapolated { radii: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct KreinOptions {
    pub diagonal: DiagonalMode,
    pub quadrature: QuadratureConfig,
}

impl Default for KreinOptions {
    fn default() -> Self {
        Self { diagonal: DiagonalMode::ClosedForm, quadrature: QuadratureConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    pub entries: ComplexMatrix,
    pub zeta: SpectralPoint,
}

/// `Q(ζ)` for the system's points.
pub fn build_q_matrix(system: &KreinSystem, s: &SpectralPoint, opts: &KreinOptions) -> Result<QMatrix> {
    let base = &system.base;
    base.check_spectral_point(s)?;
    let n = system.points.len();
    let diag = match &opts.diagonal {
        DiagonalMode::ClosedForm => diagonal_closed_form(base, s)
            .ok_or_else(|| Error::domain("no closed-form diagonal for this model"))?
            .map(|v| alloc::vec![v; n])?,
        DiagonalMode::Extrapolated { radii } => {
            let sing = Singularity::for_model(base)?;
            system
                .points
                .iter()
                .map(|p| renorm_diagonal(base, p, s, radii, &sing, &opts.quadrature).map(|v| v.value))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let mut q = ComplexMatrix::zeros(n);
    for (i, &d) in diag.iter().enumerate() {
        q.set(i, i, d);
        for j in 0..n {
            if i != j {
                let g = green(base, &system.points[i], &system.points[j], s, &opts.quadrature)?;
                q.set(i, j, g.value);
            }
        }
    }
    Ok(QMatrix { entries: q, zeta: *s })
}

fn shifted(q: &QMatrix, couplings: &[f64]) -> ComplexMatrix {
    let mut a = q.entries.clone();
    for (i, alpha) in couplings.iter().enumerate() {
        a.set(i, i, a.get(i, i) - alpha);
    }
    a
}

/// `det(Q(ζ) − diag α)`.
pub fn krein_determinant(system: &KreinSystem, s: &SpectralPoint, opts: &KreinOptions) -> Result<ComplexArg> {
    let q = build_q_matrix(system, s, opts)?;
    Ok(shifted(&q, &system.couplings).lu().map_or(ComplexArg::new(0.0, 0.0), |lu| lu.det()))
}

/// Kernel of the perturbed resolvent at `x, y ∉ M`.
pub fn perturbed_green(
    system: &KreinSystem,
    x: &Point,
    y: &Point,
    s: &SpectralPoint,
    opts: &KreinOptions,
) -> Result<EvalResult> {
    let base = &system.base;
    for p in &system.points {
        if x.distance(p)? == 0.0 || y.distance(p)? == 0.0 {
            return Err(Error::domain("evaluation points must avoid the interaction points"));
        }
    }
    let q = build_q_matrix(system, s, opts)?;
    let a = shifted(&q, &system.couplings);
    let singular = || Error::SingularQ { re: s.zeta().re, im: s.zeta().im };
    let lu = a.lu().ok_or_else(singular)?;
    let cfg = &opts.quadrature;
    let g0 = green(base, x, y, s, cfg)?;
    let mut gx = Vec::with_capacity(system.points.len());
    let mut gy = Vec::with_capacity(system.points.len());
    let mut err = g0.abs_error;
    for p in &system.points {
        let a = green(base, x, p, s, cfg)?;
        let b = green(base, p, y, s, cfg)?;
        err += a.abs_error + b.abs_error;
        gx.push(a.value);
        gy.push(b.value);
    }
    let v = lu.solve(&gy);
    let correction: ComplexArg = gx.iter().zip(&v).map(|(a, b)| a * b).sum();
    let value = crate::ensure_finite(g0.value - correction, "perturbed Green function").map_err(|_| singular())?;
    Ok(EvalResult { value, abs_error: err * (1.0 + v.iter().map(|z| z.norm()).sum::<f64>()), method: g0.method })
}

/// A perturbed eigenvalue and how many eigenvalues of `Q − diag α` cross zero
/// there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub energy: f64,
    pub multiplicity: usize,
}

/// Number of negative eigenvalues of the Hermitian matrix `Q(E) − diag α`.
pub fn negative_count(system: &KreinSystem, energy: f64, opts: &KreinOptions) -> Result<usize> {
    let s = SpectralPoint::real(energy)?;
    let q = build_q_matrix(system, &s, opts)?;
    Ok(shifted(&q, &system.couplings).hermitian_eigenvalues().iter().filter(|e| **e < 0.0).count())
}

const SCAN_POINTS: usize = 200;

/// All bound states with energies in `window`, ascending, each located to
/// within `tol`.
///
/// `Q(E)` is Hermitian for real `E` below the spectrum and increasing in `E`,
/// so the number of negative eigenvalues of `Q(E) − diag α` drops by one at
/// each root of the determinant. The window is scanned at 200 uniform
/// points and every drop is isolated by bisection on that count; roots
/// closer together than `tol` are reported once with their multiplicity.
pub fn bound_states(
    system: &KreinSystem,
    window: (f64, f64),
    tol: f64,
    opts: &KreinOptions,
) -> Result<Vec<BoundState>> {
    let (lo, hi) = window;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain("tolerance must be positive"));
    }
    if !(lo < hi && lo.is_finite()) {
        return Err(Error::domain(alloc::format!("invalid energy window [{lo}, {hi}]")));
    }
    let threshold = system.spectrum_threshold();
    if !(hi < threshold) {
        return Err(Error::WindowTouchesSpectrum { upper: hi, threshold });
    }
    let count = |e: f64| negative_count(system, e, opts);
    let mut grid = Vec::with_capacity(SCAN_POINTS + 1);
    for k in 0..=SCAN_POINTS {
        let e = if k == SCAN_POINTS { hi } else { lo + (hi - lo) * k as f64 / SCAN_POINTS as f64 };
        grid.push((e, count(e)?));
    }
    let mut found = Vec::new();
    for w in grid.windows(2) {
        isolate(&count, w[0], w[1], tol, &mut found)?;
    }
    Ok(found)
}

fn isolate(
    count: &impl Fn(f64) -> Result<usize>,
    (a, na): (f64, usize),
    (b, nb): (f64, usize),
    tol: f64,
    out: &mut Vec<BoundState>,
) -> Result<()> {
    if na <= nb {
        return Ok(());
    }
    let mid = 0.5 * (a + b);
    if b - a <= tol || !(mid > a && mid < b) {
        out.push(BoundState { energy: mid, multiplicity: na - nb });
        return Ok(());
    }
    let nm = count(mid)?;
    isolate(count, (a, na), (mid, nm), tol, out)?;
    isolate(count, (mid, nm), (b, nb), tol, out)
}
