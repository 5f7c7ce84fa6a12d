//! Longitude eigenvalue, the Schlafli integrands and their quadrature.
//!
//! Along the geometric component, `dI = -(1/4 pi^2) beta d alpha`, and the
//! integrand is read off the longitude entry `L` as `Im log L`. The pointwise
//! functions here return the principal branch. Integration needs `arg L` to be
//! continuous in `alpha`, so [`lifted_hyperbolic`] and [`lifted_spherical`]
//! unwrap it along densely tracked paths, anchored at the Euclidean angle
//! where the hyperbolic and the two spherical branches meet.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::cheb;
use crate::error::{Error, Result};
use crate::rmpoly::{meridian, KnotParams};
use crate::tracker::{GeometricComponent, TrackerConfig};

/// The integrand at `alpha = 0` is evaluated here instead.
pub const PARABOLIC_LIMIT_ALPHA: f64 = 1e-6;

/// Upper-left entry of the longitude holonomy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LongitudeValue {
    pub l: Complex64,
}

impl LongitudeValue {
    /// Complex length `gamma = 2 log L` (principal branch).
    pub fn complex_length(&self) -> Complex64 {
        2.0 * self.l.ln()
    }
}

/// `L = -(M^2 (S_n - S_{n-1}) - (S_{n-1} - S_{n-2})) / ((S_n - S_{n-1}) - M^2 (S_{n-1} - S_{n-2}))`
/// at `v = x + M^2 + M^-2`.
pub fn longitude_l(n: u32, x: Complex64, mm: Complex64) -> Result<Complex64> {
    let n = i64::from(n);
    let m2 = mm * mm;
    let v = x + m2 + m2.inv();
    let a = cheb(n, v) - cheb(n - 1, v);
    let b = cheb(n - 1, v) - cheb(n - 2, v);
    let num = m2 * a - b;
    let den = a - m2 * b;
    if den.norm() <= 1e-300 || den.norm() <= 1e-14 * (a.norm() + b.norm()) {
        return Err(Error::DegenerateLongitude);
    }
    Ok(-num / den)
}

/// `Im(2 log L)` at the geometric root, principal branch.
pub fn integrand_hyp(params: KnotParams, alpha: f64) -> Result<f64> {
    let comp = GeometricComponent::locate(params, 1e-12, TrackerConfig::default())?;
    integrand_hyp_on(&comp, alpha)
}

pub fn integrand_hyp_on(comp: &GeometricComponent, alpha: f64) -> Result<f64> {
    let x = comp.geometric_root(alpha)?;
    let l = longitude_l(comp.params.n(), x, meridian(alpha))?;
    Ok((2.0 * l.ln()).im)
}

/// `Im log L(v1) + Im log L(v2)` on the two real branches, principal branch.
pub fn integrand_sph(params: KnotParams, alpha: f64) -> Result<f64> {
    let comp = GeometricComponent::locate(params, 1e-12, TrackerConfig::default())?;
    integrand_sph_on(&comp, alpha)
}

pub fn integrand_sph_on(comp: &GeometricComponent, alpha: f64) -> Result<f64> {
    if !(alpha > comp.alpha0() && alpha <= PI) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} is outside the spherical range ({}, pi]",
            comp.alpha0()
        )));
    }
    let mm = meridian(alpha);
    let (x1, x2) = if alpha == PI {
        let (a, b) = crate::tracker::spherical_seeds(comp.params);
        (Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    } else {
        let steps = ((comp.config.steps as f64) * (PI - alpha) / PI).ceil().max(1.0) as usize;
        let h = (PI - alpha) / steps as f64;
        let targets: Vec<f64> = (1..=steps)
            .map(|j| if j == steps { alpha } else { PI - h * j as f64 })
            .collect();
        let (p1, p2) = comp.spherical_through(&targets)?;
        (p1.last().x, p2.last().x)
    };
    let n = comp.params.n();
    Ok(longitude_l(n, x1, mm)?.ln().im + longitude_l(n, x2, mm)?.ln().im)
}

/// Value of the integrand at one quadrature node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandSample {
    pub alpha: f64,
    pub beta: f64,
}

/// Composite Simpson rule with `intervals` (even) subintervals.
pub fn simpson<F>(f: F, a: f64, b: f64, intervals: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if intervals < 2 || !intervals.is_multiple_of(2) {
        return Err(Error::BadIntervalCount(intervals));
    }
    let h = (b - a) / intervals as f64;
    let values = (0..=intervals)
        .map(|j| {
            let x = if j == intervals { b } else { a + h * j as f64 };
            let y = f(x);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(Error::NonFiniteIntegrand(x))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    simpson_values(&values, a, b)
}

/// Composite Simpson rule over equally spaced `values` on `[a, b]`.
pub fn simpson_values(values: &[f64], a: f64, b: f64) -> Result<f64> {
    let intervals = values.len().saturating_sub(1);
    if intervals < 2 || !intervals.is_multiple_of(2) {
        return Err(Error::BadIntervalCount(intervals));
    }
    let h = (b - a) / intervals as f64;
    let mut sum = values[0] + values[intervals];
    for (j, &y) in values.iter().enumerate().take(intervals).skip(1) {
        sum += if j % 2 == 1 { 4.0 * y } else { 2.0 * y };
    }
    Ok(sum * h / 3.0)
}

/// A tracked root with a continuous determination of `arg L` there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftedSample {
    pub alpha: f64,
    pub x: Complex64,
    pub arg: f64,
}

fn unwrap_toward(previous: f64, principal: f64) -> f64 {
    principal + 2.0 * PI * ((previous - principal) / (2.0 * PI)).round()
}

fn principal_arg(n: u32, x: Complex64, alpha: f64) -> Result<f64> {
    Ok(longitude_l(n, x, meridian(alpha))?.arg())
}

/// Anchor of every lift: the principal `arg L` at the double root at `alpha0`.
fn anchor(comp: &GeometricComponent) -> Result<LiftedSample> {
    let x = Complex64::new(comp.alpha0.collision_x, 0.0);
    Ok(LiftedSample {
        alpha: comp.alpha0(),
        x,
        arg: principal_arg(comp.params.n(), x, comp.alpha0())?,
    })
}

/// Hyperbolic branch on `intervals * refine` equal steps of `[lower, alpha0]`,
/// increasing in `alpha`, with `arg L` unwrapped from `alpha0` downwards.
/// The sample at `alpha = 0` carries the root at [`PARABOLIC_LIMIT_ALPHA`].
pub fn lifted_hyperbolic(
    comp: &GeometricComponent,
    lower: f64,
    intervals: usize,
    refine: usize,
) -> Result<Vec<LiftedSample>> {
    let alpha0 = comp.alpha0();
    if !(lower >= 0.0 && lower < alpha0) {
        return Err(Error::NotHyperbolic { alpha: lower, alpha0 });
    }
    let total = intervals * refine.max(1);
    let h = (alpha0 - lower) / total as f64;
    let nodes: Vec<f64> = (1..=total)
        .map(|i| if i == total { lower } else { alpha0 - h * i as f64 })
        .collect();
    let targets: Vec<f64> = nodes.iter().map(|&a| a.max(PARABOLIC_LIMIT_ALPHA)).collect();
    let path = comp.hyperbolic_through(&targets)?;
    if path.len() != total + 1 {
        return Err(Error::InvalidArgument(format!(
            "quadrature step {h:e} is finer than the hyperbolic seed offset"
        )));
    }
    // samples[0] is the seed just below alpha0, then one per target
    let n = comp.params.n();
    let top = anchor(comp)?;
    let mut out = Vec::with_capacity(total + 1);
    out.push(top);
    let mut arg = top.arg;
    for s in &path.samples {
        arg = unwrap_toward(arg, principal_arg(n, s.x, s.alpha)?);
        out.push(LiftedSample {
            alpha: s.alpha,
            x: s.x,
            arg,
        });
    }
    // drop the seed; label the last node with the requested lower limit
    out.remove(1);
    if let Some(last) = out.last_mut() {
        last.alpha = lower;
    }
    out.reverse();
    debug_assert_eq!(out.len(), total + 1);
    Ok(out)
}

/// Both spherical branches on `intervals * refine` equal steps of
/// `[alpha0, pi]`, increasing in `alpha`, each with `arg L` unwrapped upward
/// from the common value at `alpha0`.
pub fn lifted_spherical(
    comp: &GeometricComponent,
    intervals: usize,
    refine: usize,
) -> Result<(Vec<LiftedSample>, Vec<LiftedSample>)> {
    let alpha0 = comp.alpha0();
    let total = intervals * refine.max(1);
    let h = (PI - alpha0) / total as f64;
    let targets: Vec<f64> = (1..total).map(|i| PI - h * i as f64).collect();
    let (p1, p2) = comp.spherical_through(&targets)?;
    let n = comp.params.n();
    let top = anchor(comp)?;
    let lift = |path: &crate::tracker::BranchPath| -> Result<Vec<LiftedSample>> {
        let mut out = Vec::with_capacity(total + 1);
        out.push(top);
        let mut arg = top.arg;
        for s in path.samples.iter().rev() {
            arg = unwrap_toward(arg, principal_arg(n, s.x, s.alpha)?);
            out.push(LiftedSample {
                alpha: s.alpha,
                x: s.x,
                arg,
            });
        }
        Ok(out)
    };
    Ok((lift(&p1)?, lift(&p2)?))
}

/// Continuation substeps per quadrature interval, so that paths are sampled at
/// least `config.steps` times over a sweep of length `pi`.
pub fn refinement(comp: &GeometricComponent, intervals: usize, span: f64) -> usize {
    let wanted = comp.config.steps as f64 * span / PI;
    ((wanted / intervals as f64).ceil() as usize).max(1)
}

/// Hyperbolic integrand `2 arg L` (continuous) at the Simpson nodes of `[lower, alpha0]`.
pub fn hyperbolic_integrand_nodes(
    comp: &GeometricComponent,
    lower: f64,
    intervals: usize,
) -> Result<Vec<IntegrandSample>> {
    let refine = refinement(comp, intervals, comp.alpha0() - lower);
    let lifted = lifted_hyperbolic(comp, lower, intervals, refine)?;
    Ok(lifted
        .iter()
        .step_by(refine)
        .map(|s| IntegrandSample {
            alpha: s.alpha,
            beta: 2.0 * s.arg,
        })
        .collect())
}

/// Spherical integrand `arg L(v1) + arg L(v2)` (continuous) at the Simpson
/// nodes of `[alpha0, pi]`.
pub fn spherical_integrand_nodes(comp: &GeometricComponent, intervals: usize) -> Result<Vec<IntegrandSample>> {
    let refine = refinement(comp, intervals, PI - comp.alpha0());
    let (b1, b2) = lifted_spherical(comp, intervals, refine)?;
    Ok(b1
        .iter()
        .zip(&b2)
        .step_by(refine)
        .map(|(s1, s2)| IntegrandSample {
            alpha: s1.alpha,
            beta: s1.arg + s2.arg,
        })
        .collect())
}

/// `int_lower^alpha0 2 arg L d alpha` by composite Simpson.
pub fn integrate_hyperbolic(comp: &GeometricComponent, lower: f64, intervals: usize) -> Result<f64> {
    if intervals < 2 || !intervals.is_multiple_of(2) {
        return Err(Error::BadIntervalCount(intervals));
    }
    let nodes = hyperbolic_integrand_nodes(comp, lower, intervals)?;
    let values: Vec<f64> = nodes.iter().map(|s| s.beta).collect();
    simpson_values(&values, lower, comp.alpha0())
}

/// `int_alpha0^pi (arg L(v1) + arg L(v2)) d alpha` by composite Simpson.
pub fn integrate_spherical(comp: &GeometricComponent, intervals: usize) -> Result<f64> {
    if intervals < 2 || !intervals.is_multiple_of(2) {
        return Err(Error::BadIntervalCount(intervals));
    }
    let nodes = spherical_integrand_nodes(comp, intervals)?;
    let values: Vec<f64> = nodes.iter().map(|s| s.beta).collect();
    simpson_values(&values, comp.alpha0(), PI)
}
