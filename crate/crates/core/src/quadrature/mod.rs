//! Adaptive quadrature on finite intervals and on `(0, ∞)`.
//!
//! All integrals are assembled from 21-point Gauss–Kronrod panels refined by
//! global bisection of the panel with the largest error estimate. Half-line
//! integrals are split at [`QuadratureConfig::split_point`] `T`:
//!
//! * the tail `[T, ∞)` is mapped with `t = T·eˢ` and walked in unit panels
//!   until the contributions become negligible, which copes with both
//!   exponential and algebraic decay;
//! * the head `(0, T]` uses `t = u²` when [`EndpointHints::sqrt_endpoint`] is
//!   set (this removes a `t^{-1/2}` endpoint singularity), and otherwise
//!   `t = T·e^{-s}`, i.e. `u = 1/t` followed by logarithmic spacing. With
//!   [`EndpointHints::essential_zero`] the head walk stops once `exp(−a/t)`
//!   underflows.
//!
//! Refinement also stops once the summed error estimate is within twice the
//! rounding floor `50·ε·∫|f|` of the Kronrod rule; the reported estimate is
//! then that floor.
//!
//! Panels are summed in position order so results are bit-identical for
//! identical inputs.

mod kronrod;

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{ComplexArg, Error, Result};
use kronrod::{gk21, NODES};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Boundary between head and tail treatment on the half-line.
    pub split_point: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-12, max_subdivisions: 2000, split_point: 1.0 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        let in_unit = |x: f64| x > 0.0 && x < 1.0;
        if !in_unit(self.rel_tol)
            || !in_unit(self.abs_tol)
            || self.max_subdivisions < 4
            || !(self.split_point > 0.0 && self.split_point.is_finite())
        {
            return Err(Error::domain(alloc::format!("invalid quadrature config {self:?}")));
        }
        Ok(())
    }

    pub fn with_split_point(mut self, split_point: f64) -> Self {
        self.split_point = split_point;
        self
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: ComplexArg,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Shape information about a half-line integrand near `t = 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EndpointHints {
    /// The integrand behaves like `t^{-1/2}` (or is merely bounded) at 0.
    pub sqrt_endpoint: bool,
    /// The integrand carries a factor `exp(−a/t)` with this `a > 0`.
    pub essential_zero: Option<f64>,
}

impl EndpointHints {
    pub fn sqrt_endpoint() -> Self {
        Self { sqrt_endpoint: true, essential_zero: None }
    }

    pub fn essential_zero(a: f64) -> Self {
        Self { sqrt_endpoint: false, essential_zero: if a > 0.0 { Some(a) } else { None } }
    }
}

#[derive(Debug, Clone, Copy)]
enum Map {
    Identity,
    /// t = u²
    Square,
    /// t = T eˢ
    LogUp(f64),
    /// t = T e^{-s}
    LogDown(f64),
}

impl Map {
    /// Original abscissa and Jacobian.
    fn apply(self, s: f64) -> (f64, f64) {
        match self {
            Map::Identity => (s, 1.0),
            Map::Square => (s * s, 2.0 * s),
            Map::LogUp(t0) => {
                let t = t0 * s.exp();
                (t, t)
            }
            Map::LogDown(t0) => {
                let t = t0 * (-s).exp();
                (t, t)
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    map: Map,
    /// Order key: panels are summed in this order.
    key: (u8, f64),
    a: f64,
    b: f64,
    value: ComplexArg,
    error: f64,
    floor: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.key.partial_cmp(&self.key).unwrap_or(Ordering::Equal))
    }
}

struct Engine<'f, F> {
    f: &'f mut F,
    evaluations: usize,
}

impl<F: FnMut(f64) -> ComplexArg> Engine<'_, F> {
    fn panel(&mut self, map: Map, group: u8, a: f64, b: f64) -> Result<Panel> {
        let f = &mut *self.f;
        let mut g = |s: f64| -> core::result::Result<ComplexArg, f64> {
            let (t, jac) = map.apply(s);
            let v = f(t);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(t);
            }
            if jac == 0.0 || v == ComplexArg::new(0.0, 0.0) {
                return Ok(ComplexArg::new(0.0, 0.0));
            }
            let w = v * jac;
            if w.re.is_finite() && w.im.is_finite() {
                Ok(w)
            } else {
                Err(t)
            }
        };
        let est = gk21(&mut g, a, b).map_err(|at| Error::NonFiniteIntegrand { at })?;
        self.evaluations += NODES;
        Ok(Panel { map, key: (group, a), a, b, value: est.value, error: est.error, floor: est.floor })
    }

    /// Walks unit panels in `s` from 0 until contributions die out.
    fn walk(
        &mut self,
        map: Map,
        group: u8,
        cfg: &QuadratureConfig,
        stop_at: Option<f64>,
        out: &mut Vec<Panel>,
    ) -> Result<()> {
        const MAX_WALK: usize = 160;
        let mut running = ComplexArg::new(0.0, 0.0);
        let mut quiet = 0;
        for k in 0..MAX_WALK {
            let a = k as f64;
            if let Some(limit) = stop_at {
                if map.apply(a).0 < limit {
                    break;
                }
            }
            let p = self.panel(map, group, a, a + 1.0)?;
            running += p.value;
            let size = p.value.norm() + p.error;
            out.push(p);
            let target = 1e-3 * cfg.abs_tol.max(cfg.rel_tol * running.norm());
            if size <= target && running.norm() > 0.0 {
                quiet += 1;
                if quiet >= 2 {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        Ok(())
    }

    fn refine(&mut self, panels: Vec<Panel>, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
        let mut heap: BinaryHeap<Panel> = panels.into_iter().collect();
        loop {
            let total: ComplexArg = heap.iter().map(|p| p.value).sum();
            let err: f64 = heap.iter().map(|p| p.error).sum();
            if !err.is_finite() {
                return Err(Error::NonFiniteIntegrand { at: f64::NAN });
            }
            // Once rounding dominates, bisection cannot lower the estimate.
            let floor: f64 = heap.iter().map(|p| p.floor).sum();
            if err <= cfg.abs_tol.max(cfg.rel_tol * total.norm()).max(2.0 * floor) {
                break;
            }
            if heap.len() >= cfg.max_subdivisions {
                let (value, estimate) = ordered_sum(heap.into_vec());
                return Err(Error::ToleranceNotMet { value_re: value.re, value_im: value.im, estimate });
            }
            let worst = heap.pop().expect("non-empty panel set");
            let mid = 0.5 * (worst.a + worst.b);
            if !(mid > worst.a && mid < worst.b) {
                // Panel cannot be split further in floating point.
                let (value, estimate) = ordered_sum(heap.into_vec());
                return Err(Error::ToleranceNotMet {
                    value_re: value.re + worst.value.re,
                    value_im: value.im + worst.value.im,
                    estimate: estimate + worst.error,
                });
            }
            let left = self.panel(worst.map, worst.key.0, worst.a, mid)?;
            let right = self.panel(worst.map, worst.key.0, mid, worst.b)?;
            heap.push(left);
            heap.push(right);
        }
        let (value, abs_error_estimate) = ordered_sum(heap.into_vec());
        Ok(QuadratureResult { value, abs_error_estimate, evaluations: self.evaluations })
    }
}

/// Pairwise sum of panel values in position order.
fn ordered_sum(mut panels: Vec<Panel>) -> (ComplexArg, f64) {
    panels.sort_by(|p, q| p.key.partial_cmp(&q.key).unwrap_or(Ordering::Equal));
    let values: Vec<ComplexArg> = panels.iter().map(|p| p.value).collect();
    let errors: Vec<f64> = panels.iter().map(|p| p.error).collect();
    (pairwise(&values), pairwise_real(&errors))
}

fn pairwise(v: &[ComplexArg]) -> ComplexArg {
    match v.len() {
        0 => ComplexArg::new(0.0, 0.0),
        1 => v[0],
        n => pairwise(&v[..n / 2]) + pairwise(&v[n / 2..]),
    }
}

fn pairwise_real(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        n => pairwise_real(&v[..n / 2]) + pairwise_real(&v[n / 2..]),
    }
}

/// Integral of `f` over the finite interval `[a, b]`.
pub fn integrate_interval<F>(mut f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> ComplexArg,
{
    cfg.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(alloc::format!("integration interval [{a}, {b}] must be finite with a < b")));
    }
    let mut engine = Engine { f: &mut f, evaluations: 0 };
    let first = engine.panel(Map::Identity, 0, a, b)?;
    engine.refine(alloc::vec![first], cfg)
}

/// Integral of `f` over `(0, ∞)`.
pub fn integrate_halfline<F>(mut f: F, cfg: &QuadratureConfig, hints: EndpointHints) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> ComplexArg,
{
    cfg.validate()?;
    let split = cfg.split_point;
    let mut engine = Engine { f: &mut f, evaluations: 0 };
    let mut panels = Vec::new();
    if hints.sqrt_endpoint && hints.essential_zero.is_none() {
        let root = split.sqrt();
        let n = 4;
        for k in 0..n {
            let a = root * k as f64 / n as f64;
            let b = root * (k + 1) as f64 / n as f64;
            panels.push(engine.panel(Map::Square, 0, a, b)?);
        }
    } else {
        // exp(−a/t) < e^{-745} below t = a/745: the integrand is exactly zero.
        let stop = hints.essential_zero.map(|a| a / 745.0);
        let mut head = Vec::new();
        engine.walk(Map::LogDown(split), 0, cfg, stop, &mut head)?;
        // Keys must increase with t: LogDown panels run backwards.
        for p in head.iter_mut() {
            p.key = (0, -p.a);
        }
        panels.extend(head);
    }
    let mut tail = Vec::new();
    engine.walk(Map::LogUp(split), 1, cfg, None, &mut tail)?;
    panels.extend(tail);
    engine.refine(panels, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cr;
    use core::f64::consts::PI;

    fn strict() -> QuadratureConfig {
        QuadratureConfig::default().with_tolerances(1e-12, 1e-300)
    }

    #[test]
    fn interval_examples() {
        let cfg = strict();
        let r = integrate_interval(|t| cr(t * t), 0.0, 1.0, &cfg).unwrap();
        assert!((r.value.re - 1.0 / 3.0).abs() < 1e-14);
        let r = integrate_interval(|t| cr(t.ln()), 0.0, 1.0, &cfg).unwrap();
        assert!((r.value.re + 1.0).abs() < 1e-11, "{r:?}");
        let r = integrate_interval(|t| cr(t.sin()), 0.0, PI, &cfg).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn halfline_examples() {
        let cfg = strict();
        let r = integrate_halfline(|t| cr((-t * t).exp()), &cfg, EndpointHints::default()).unwrap();
        assert!((r.value.re - 0.886_226_925_452_758).abs() < 1e-13, "{r:?}");
        let r = integrate_halfline(|t| cr((-t).exp() / t.sqrt()), &cfg, EndpointHints::sqrt_endpoint()).unwrap();
        assert!((r.value.re - 1.772_453_850_905_516).abs() < 1e-12, "{r:?}");
        let r = integrate_halfline(|t| cr((-t * t - 1.0 / (t * t)).exp()), &cfg, EndpointHints::essential_zero(1.0))
            .unwrap();
        assert!((r.value.re - 0.119_937_771_968_061_44).abs() < 1e-13, "{r:?}");
    }

    #[test]
    fn sqrt_endpoint_without_hint_still_converges() {
        let r = integrate_halfline(|t| cr((-t).exp() / t.sqrt()), &strict(), EndpointHints::default()).unwrap();
        assert!((r.value.re - PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let e = integrate_interval(|t| cr(1.0 / (t - 0.5)), 0.0, 1.0, &strict()).unwrap_err();
        assert_eq!(e.kind(), "NonFiniteIntegrand");
    }

    #[test]
    fn budget_exhaustion_reports_best_value() {
        let cfg = QuadratureConfig { max_subdivisions: 4, ..strict() };
        let e = integrate_interval(|t| cr((50.0 * t).sin().abs()), 0.0, 3.0, &cfg).unwrap_err();
        assert!(matches!(e, Error::ToleranceNotMet { .. }));
    }

    #[test]
    fn config_validation() {
        let bad = QuadratureConfig { split_point: 0.0, ..Default::default() };
        assert!(integrate_interval(cr, 0.0, 1.0, &bad).is_err());
        assert!(integrate_interval(cr, 1.0, 1.0, &QuadratureConfig::default()).is_err());
    }
}
