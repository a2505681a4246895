//! Argument definitions and subcommand drivers.
//!
//! Every driver renders its full output into a string before anything is
//! printed, so a failing command leaves stdout empty.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use greenkern_core::krein::{bound_states, DiagonalMode, KreinOptions};
use greenkern_core::models::{green, GreenModel, Point, SpectralPoint};
use greenkern_core::quadrature::QuadratureConfig;
use greenkern_core::renorm::{
    default_radii, direction, fit_singularity, log_radii, renorm_diagonal, renorm_sample, zeta_independence_probe,
    BasisTerm, Singularity,
};
use greenkern_core::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{render, BoundStateRow, OutputRecord, RenormRow};
use crate::parse::{parse_basis, parse_point, parse_radii, parse_window, parse_zeta};
use crate::system::{ModelSpec, SystemFile};
use crate::{verify, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "greenkern",
    version,
    about = "Green functions of Schrödinger operators and their diagonal renormalization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate G(x, y; ζ).
    Eval(EvalArgs),
    /// Sample G − S near the diagonal and extrapolate to it.
    Renorm(RenormArgs),
    /// Least-squares fit of near-diagonal samples of G over a singular basis.
    Fit(FitArgs),
    /// Compare G at two spectral parameters near the diagonal.
    ZetaProbe(ZetaProbeArgs),
    /// Bound states of a finite point-interaction system.
    Krein(KreinArgs),
    /// Run verification suites and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// free1d, free2d, free3d, free4d, coulomb3d, landau3d or invosc1d.
    #[arg(long)]
    pub model: String,
    /// Coulomb charge.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Landau flux density.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<f64>,
    /// Inverted-oscillator frequency.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
}

impl ModelArgs {
    fn spec(&self) -> ModelSpec {
        ModelSpec { model: self.model.clone(), q: self.q, xi: self.xi, omega: self.omega }
    }
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Relative tolerance of the quadrature-based evaluators.
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    /// Absolute tolerance of the quadrature-based evaluators.
    #[arg(long, default_value_t = 1e-12)]
    pub abs_tol: f64,
}

impl QuadArgs {
    fn config(&self) -> Result<QuadratureConfig, CliError> {
        let cfg = QuadratureConfig::default().with_tolerances(self.rel_tol, self.abs_tol);
        cfg.validate()?;
        Ok(cfg)
    }
}

// Aliases keep clap from treating these values as repeated arguments.
type Coords = Vec<f64>;
type Radii = Vec<f64>;
type Basis = Vec<BasisTerm>;

fn zeta_arg(s: &str) -> Result<Complex64, String> {
    parse_zeta(s)
}

fn point_arg(s: &str) -> Result<Coords, String> {
    parse_point(s)
}

fn radii_arg(s: &str) -> Result<Radii, String> {
    parse_radii(s)
}

fn basis_arg(s: &str) -> Result<Basis, String> {
    parse_basis(s)
}

fn window_arg(s: &str) -> Result<(f64, f64), String> {
    parse_window(s)
}

fn list_arg(s: &str) -> Result<Coords, String> {
    crate::parse::parse_list(s)
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Spectral parameter as re[,im].
    #[arg(long, allow_hyphen_values = true, value_parser = zeta_arg)]
    pub zeta: Complex64,
    /// Distances along the first axis from the origin, comma-separated.
    #[arg(long, allow_hyphen_values = true, value_parser = list_arg, conflicts_with_all = ["x", "dx"])]
    pub r: Option<Coords>,
    /// First point.
    #[arg(long, allow_hyphen_values = true, value_parser = point_arg, conflicts_with = "dx")]
    pub x: Option<Coords>,
    /// Second point (default: origin).
    #[arg(long, allow_hyphen_values = true, value_parser = point_arg, requires = "x")]
    pub y: Option<Coords>,
    /// Separation x − y with y at the origin.
    #[arg(long, allow_hyphen_values = true, value_parser = point_arg)]
    pub dx: Option<Coords>,
    #[command(flatten)]
    pub quad: QuadArgs,
    /// JSON lines instead of CSV.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SingularityChoice {
    /// The model's own singularity (standard, magnetic or Coulomb-log).
    Auto,
    Standard,
    Magnetic,
    CoulombLog,
    None,
}

#[derive(Debug, Args)]
pub struct RenormArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true, value_parser = zeta_arg)]
    pub zeta: Complex64,
    /// Base point (default: origin).
    #[arg(long, allow_hyphen_values = true, value_parser = point_arg)]
    pub at: Option<Coords>,
    /// hi:lo:n or a comma list (default: 12 radii from 1e-1 to 1e-5).
    #[arg(long, value_parser = radii_arg)]
    pub radii: Option<Radii>,
    #[arg(long, value_enum, default_value_t = SingularityChoice::Auto)]
    pub singularity: SingularityChoice,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true, value_parser = zeta_arg)]
    pub zeta: Complex64,
    #[arg(long, allow_hyphen_values = true, value_parser = point_arg)]
    pub at: Option<Coords>,
    /// hi:lo:n or a comma list (default: 12 radii from 1e-1 to 1e-5).
    #[arg(long, value_parser = radii_arg)]
    pub radii: Option<Radii>,
    /// Comma-separated subset of inv2, inv1, log, const, rlogr, r, r2, r2logr.
    #[arg(long, value_parser = basis_arg)]
    pub basis: Basis,
    /// Subtract this singularity from G before fitting (default: none).
    #[arg(long, value_enum, default_value_t = SingularityChoice::None)]
    pub subtract: SingularityChoice,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
pub struct ZetaProbeArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true, value_parser = zeta_arg)]
    pub zeta1: Complex64,
    #[arg(long, allow_hyphen_values = true, value_parser = zeta_arg)]
    pub zeta2: Complex64,
    /// hi:lo:n or a comma list (default: 13 radii from 1e-2 to 1e-5).
    #[arg(long, value_parser = radii_arg)]
    pub radii: Option<Radii>,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagonalChoice {
    ClosedForm,
    Extrapolated,
}

#[derive(Debug, Args)]
pub struct KreinArgs {
    /// JSON file with {base, points, alphas}.
    #[arg(long)]
    pub system: PathBuf,
    /// Energy window lo,hi below the spectrum (default: -1e4 up to just
    /// below the spectrum).
    #[arg(long, allow_hyphen_values = true, value_parser = window_arg)]
    pub window: Option<(f64, f64)>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = DiagonalChoice::ClosedForm)]
    pub diagonal: DiagonalChoice,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(default_value = "all")]
    pub suite: String,
}

/// What a successful command prints and its exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Eval(a) => eval(a).map(Output::ok),
        Command::Renorm(a) => renorm(a).map(Output::ok),
        Command::Fit(a) => fit(a).map(Output::ok),
        Command::ZetaProbe(a) => zeta_probe(a).map(Output::ok),
        Command::Krein(a) => krein(a).map(Output::ok),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn point_in(model: &GreenModel, coords: &[f64]) -> Result<Point, CliError> {
    let dim = model.ambient_dim();
    if coords.len() != dim {
        return Err(CliError::Usage(format!(
            "model {} needs {dim} coordinates per point, got {}",
            model.tag(),
            coords.len()
        )));
    }
    Ok(Point::new(coords)?)
}

fn base_point(model: &GreenModel, at: &Option<Coords>) -> Result<Point, CliError> {
    match at {
        Some(v) => point_in(model, v),
        None => Ok(Point::origin(model.ambient_dim())),
    }
}

fn singularity(choice: SingularityChoice, model: &GreenModel) -> Result<Singularity, CliError> {
    let dim = model.ambient_dim();
    Ok(match (choice, *model) {
        (SingularityChoice::Auto, m) => Singularity::for_model(&m)?,
        (SingularityChoice::None, _) => Singularity::None,
        (SingularityChoice::Standard, _) => Singularity::Standard { dim },
        (SingularityChoice::Magnetic, GreenModel::Landau3D { xi }) => {
            Singularity::Magnetic { field: 2.0 * std::f64::consts::PI * xi }
        }
        (SingularityChoice::CoulombLog, GreenModel::Coulomb3D { q }) => Singularity::CoulombLog { q },
        (c, m) => return Err(CliError::Usage(format!("singularity {c:?} does not apply to model {}", m.tag()))),
    })
}

fn eval(a: &EvalArgs) -> Result<String, CliError> {
    let spec = a.model.spec();
    let model = spec.build()?;
    let s = SpectralPoint::new(a.zeta)?;
    model.check_spectral_point(&s)?;
    let cfg = a.quad.config()?;
    let dim = model.ambient_dim();
    let origin = Point::origin(dim);
    let pairs: Vec<(Point, Point)> = match (&a.r, &a.x, &a.dx) {
        (Some(rs), None, None) => rs
            .iter()
            .map(|&r| {
                if !(r.is_finite() && r >= 0.0) {
                    return Err(greenkern_core::Error::domain(format!(
                        "distance r = {r} must be finite and nonnegative"
                    ))
                    .into());
                }
                Ok((direction(dim, false).scale(r), origin))
            })
            .collect::<Result<_, CliError>>()?,
        (None, Some(x), None) => {
            let y = match &a.y {
                Some(y) => point_in(&model, y)?,
                None => origin,
            };
            vec![(point_in(&model, x)?, y)]
        }
        (None, None, Some(dx)) => vec![(point_in(&model, dx)?, origin)],
        _ => return Err(CliError::Usage("give exactly one of --r, --x or --dx".into())),
    };
    let records = pairs
        .par_iter()
        .map(|(x, y)| {
            let g = green(&model, x, y, &s, &cfg)?;
            Ok(OutputRecord {
                model: model.tag().to_string(),
                params: spec.params(),
                zeta_re: a.zeta.re,
                zeta_im: a.zeta.im,
                coords: x.coords().iter().chain(y.coords()).copied().collect(),
                value_re: g.value.re,
                value_im: g.value.im,
                abs_error: g.abs_error,
                method: g.method.as_str().to_string(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(render(&records, a.json))
}

fn renorm(a: &RenormArgs) -> Result<String, CliError> {
    let model = a.model.spec().build()?;
    let s = SpectralPoint::new(a.zeta)?;
    let cfg = a.quad.config()?;
    let x = base_point(&model, &a.at)?;
    let radii = a.radii.clone().unwrap_or_else(default_radii);
    let sing = singularity(a.singularity, &model)?;
    let limit = renorm_diagonal(&model, &x, &s, &radii, &sing, &cfg)?;
    // Rows follow the direction whose limit is reported.
    let e = direction(model.ambient_dim(), matches!(model, GreenModel::Landau3D { .. }));
    let mut rows = radii
        .par_iter()
        .map(|&r| {
            let smp = renorm_sample(&model, &x, &e, &s, r, &sing, &cfg)?;
            let reg = smp.regular();
            Ok(RenormRow {
                kind: "sample".into(),
                r: Some(r),
                g_re: Some(smp.green.re),
                g_im: Some(smp.green.im),
                s_re: Some(smp.singular.re),
                s_im: Some(smp.singular.im),
                value_re: reg.re,
                value_im: reg.im,
                abs_error: smp.green_error,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    rows.push(RenormRow {
        kind: "extrapolated".into(),
        r: None,
        g_re: None,
        g_im: None,
        s_re: None,
        s_im: None,
        value_re: limit.value.re,
        value_im: limit.value.im,
        abs_error: limit.extrapolation_error,
    });
    Ok(render(&rows, a.json))
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct FitReport {
    model: String,
    zeta_re: f64,
    zeta_im: f64,
    terms: Vec<&'static str>,
    coeffs_re: Vec<f64>,
    coeffs_im: Vec<f64>,
    std_errors: Vec<f64>,
    residual: f64,
    radii_used: Vec<f64>,
    condition: f64,
}

fn fit(a: &FitArgs) -> Result<String, CliError> {
    let model = a.model.spec().build()?;
    let s = SpectralPoint::new(a.zeta)?;
    model.check_spectral_point(&s)?;
    let cfg = a.quad.config()?;
    let x = base_point(&model, &a.at)?;
    let radii = a.radii.clone().unwrap_or_else(default_radii);
    let sing = singularity(a.subtract, &model)?;
    let e = direction(model.ambient_dim(), false);
    let samples = radii
        .par_iter()
        .map(|&r| {
            let smp = renorm_sample(&model, &x, &e, &s, r, &sing, &cfg)?;
            Ok((r, smp.regular()))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let f = fit_singularity(&samples, &a.basis)?;
    Ok(json_line(&FitReport {
        model: model.tag().to_string(),
        zeta_re: a.zeta.re,
        zeta_im: a.zeta.im,
        terms: f.terms.iter().map(|t| t.name()).collect(),
        coeffs_re: f.coeffs.iter().map(|c| c.re).collect(),
        coeffs_im: f.coeffs.iter().map(|c| c.im).collect(),
        std_errors: f.std_errors,
        residual: f.residual,
        radii_used: f.radii_used,
        condition: f.condition,
    }))
}

#[derive(Serialize)]
struct ProbeReport {
    model: String,
    bounded: bool,
    fitted_log_slope_re: f64,
    fitted_log_slope_im: f64,
    slope_error: f64,
    max_variation: f64,
    limit_re: f64,
    limit_im: f64,
    limit_error: f64,
    radii: Vec<f64>,
    difference_re: Vec<f64>,
    difference_im: Vec<f64>,
}

fn zeta_probe(a: &ZetaProbeArgs) -> Result<String, CliError> {
    let model = a.model.spec().build()?;
    let (z1, z2) = (SpectralPoint::new(a.zeta1)?, SpectralPoint::new(a.zeta2)?);
    let cfg = a.quad.config()?;
    let radii = match &a.radii {
        Some(r) => r.clone(),
        None => log_radii(1e-2, 1e-5, 13)?,
    };
    let p = zeta_independence_probe(&model, &z1, &z2, &radii, &cfg)?;
    Ok(json_line(&ProbeReport {
        model: model.tag().to_string(),
        bounded: p.bounded,
        fitted_log_slope_re: p.fitted_log_slope.re,
        fitted_log_slope_im: p.fitted_log_slope.im,
        slope_error: p.slope_error,
        max_variation: p.max_variation,
        limit_re: p.limit.re,
        limit_im: p.limit.im,
        limit_error: p.limit_error,
        radii: p.samples.iter().map(|s| s.0).collect(),
        difference_re: p.samples.iter().map(|s| s.1.re).collect(),
        difference_im: p.samples.iter().map(|s| s.1.im).collect(),
    }))
}

fn krein(a: &KreinArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&a.system)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", a.system.display())))?;
    let system = SystemFile::parse(&text)?.build()?;
    let threshold = system.spectrum_threshold();
    let window = a.window.unwrap_or((-1e4, threshold - 1e-6 * threshold.abs().max(1.0)));
    let opts = KreinOptions {
        diagonal: match a.diagonal {
            DiagonalChoice::ClosedForm => DiagonalMode::ClosedForm,
            DiagonalChoice::Extrapolated => DiagonalMode::Extrapolated { radii: default_radii() },
        },
        ..KreinOptions::default()
    };
    let roots = bound_states(&system, window, a.tol, &opts)?;
    let rows: Vec<BoundStateRow> =
        roots.iter().map(|b| BoundStateRow { energy: b.energy, multiplicity: b.multiplicity }).collect();
    Ok(render(&rows, a.json))
}

fn verify_cmd(a: &VerifyArgs) -> Result<Output, CliError> {
    let names: Vec<&str> = if a.suite == "all" {
        verify::SUITES.to_vec()
    } else if verify::is_suite(&a.suite) {
        vec![a.suite.as_str()]
    } else {
        return Err(CliError::Usage(format!(
            "unknown suite {:?} (expected all or one of {})",
            a.suite,
            verify::SUITES.join(", ")
        )));
    };
    let report = verify::run(&names);
    let stdout = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    Ok(Output { stdout, code: if report.passed { 0 } else { 1 } })
}
