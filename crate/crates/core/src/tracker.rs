//! Continuation of the geometric component of `{phi = 0}` in the cone angle.
//!
//! At `alpha = pi` the geometric component meets the real line in two points
//! `x1`, `x2`. Decreasing `alpha`, both stay real (spherical structures) until
//! they collide at the Euclidean angle `alpha0`; below it they form a conjugate
//! pair (hyperbolic structures). Because `phi(., e^{i alpha/2})` has real
//! coefficients, one member of the pair determines the other.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::cheb;
use crate::error::{Error, Result};
use crate::rmpoly::{meridian, rm_coeffs, rm_eval, rm_eval_dx, KnotParams};
use crate::roots::{aberth, aberth_with, DEFAULT_MAX_ITERATIONS};

/// Lower end of the range in which the Euclidean angle must lie.
pub const ALPHA0_LOWER: f64 = 2.0 * PI / 3.0;

/// Smallest cone angle accepted by [`all_roots`].
pub const ALL_ROOTS_MIN_ALPHA: f64 = 0.1;

/// Largest continuation step in `alpha`, however coarse the requested grid.
/// Coarser steps let Newton settle on a neighbouring root of the larger knots.
pub const MAX_STEP: f64 = 0.02;

/// Knobs for numerical continuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackerConfig {
    /// Continuation steps per sweep from `pi` to the target.
    pub steps: usize,
    /// Largest accepted change of `x` in one step.
    pub jump_bound: f64,
    /// How many times one grid step may be halved before giving up.
    pub max_halvings: u32,
    pub max_newton_iterations: usize,
    /// Accepted `|phi|` at a converged sample.
    pub residual_tol: f64,
    /// Iteration cap for the all-roots solver.
    pub root_iterations: usize,
    /// How far below `alpha0` the hyperbolic branch is seeded.
    pub hyperbolic_offset: f64,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        Self {
            steps: 2000,
            jump_bound: 0.2,
            max_halvings: 20,
            max_newton_iterations: 50,
            residual_tol: 1e-9,
            root_iterations: DEFAULT_MAX_ITERATIONS,
            hyperbolic_offset: 1e-7,
        }
    }
}

/// Which kind of geometric structure a branch describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `alpha > alpha0`: two real roots `x1`, `x2`.
    Spherical,
    /// `alpha < alpha0`: a conjugate pair; the member satisfying the sign
    /// condition is stored.
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchSample {
    pub alpha: f64,
    pub x: Complex64,
}

/// A sampled curve `alpha -> x(alpha)` on one component of `{phi = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchPath {
    pub params: KnotParams,
    pub regime: Regime,
    pub samples: Vec<BranchSample>,
}

impl BranchPath {
    pub fn last(&self) -> BranchSample {
        *self.samples.last().expect("a branch path always holds its seed")
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Seeds `(x1, x2) = (2 - 2cos(pi(2m+1)/(4nm+1)), 2 - 2cos(pi(2m-1)/(4nm+1)))`
/// of the geometric component at `alpha = pi`.
pub fn spherical_seeds(params: KnotParams) -> (f64, f64) {
    let m = f64::from(params.m());
    let denom = params.determinant() as f64;
    let x1 = 2.0 - 2.0 * (PI * (2.0 * m + 1.0) / denom).cos();
    let x2 = 2.0 - 2.0 * (PI * (2.0 * m - 1.0) / denom).cos();
    (x1, x2)
}

/// `Im((S_n(v) - S_{n-1}(v)) * conj(S_{n-1}(v) - S_{n-2}(v)))`. The geometric
/// member of the hyperbolic conjugate pair makes this nonnegative.
pub fn geometric_sign(params: KnotParams, x: Complex64, alpha: f64) -> f64 {
    let n = i64::from(params.n());
    let m2 = meridian(alpha).powi(2);
    let v = x + m2 + m2.inv();
    let a = cheb(n, v) - cheb(n - 1, v);
    let b = cheb(n - 1, v) - cheb(n - 2, v);
    (a * b.conj()).im
}

/// All `2mn` roots of `phi(., M)`.
///
/// Aberth-Ehrlich on the interpolated coefficients supplies starting points;
/// the same iteration is then continued on `phi` and `phi'` evaluated directly,
/// since the monomial coefficients alone cannot resolve the clustered real
/// roots of the larger knots in double precision. When interpolation itself is
/// too ill-conditioned (degree ~48 and up) the iteration starts from a circle.
pub fn all_roots(params: KnotParams, mm: Complex64) -> Result<Vec<Complex64>> {
    all_roots_with(params, mm, DEFAULT_MAX_ITERATIONS)
}

pub fn all_roots_with(params: KnotParams, mm: Complex64, max_iterations: usize) -> Result<Vec<Complex64>> {
    rm_eval_dx(params, Complex64::new(0.0, 0.0), mm)?;
    let (warm, iterations) = match rm_coeffs(params, mm) {
        Ok(poly) => match aberth(&poly, max_iterations) {
            Ok(r) => (r, max_iterations),
            Err(Error::RootsNotConverged { .. }) => (aberth(&poly, 4 * max_iterations)?, max_iterations),
            Err(e) => return Err(e),
        },
        // too ill-conditioned to interpolate: start cold on a circle
        Err(Error::SingularInterpolation) => (circle_guesses(params.degree()), 4 * max_iterations),
        Err(e) => return Err(e),
    };
    aberth_with(
        |z| {
            let (f, df) = rm_eval_dx(params, z, mm).expect("meridian already checked");
            (f, df, 0.0)
        },
        warm,
        iterations,
    )
}

fn circle_guesses(degree: usize) -> Vec<Complex64> {
    (0..degree)
        .map(|k| Complex64::from_polar(2.0, 2.0 * PI * k as f64 / degree as f64 + 0.4))
        .collect()
}

/// Newton on `phi(., e^{i alpha/2})` from `x0`. With `real` set the iteration
/// is confined to the real line.
fn newton(params: KnotParams, x0: Complex64, alpha: f64, real: bool, cfg: &TrackerConfig) -> Option<Complex64> {
    let mm = meridian(alpha);
    let mut x = x0;
    let mut last = f64::INFINITY;
    for _ in 0..cfg.max_newton_iterations {
        let (f, df) = rm_eval_dx(params, x, mm).ok()?;
        let mut step = f / df;
        if real {
            step = Complex64::new(step.re, 0.0);
        }
        if !step.is_finite() {
            return None;
        }
        x -= step;
        let size = step.norm();
        let scale = 1.0 + x.norm();
        // near a double root the step bottoms out at noise / |phi'|
        if size <= 1e-14 * scale || (size <= 1e-9 * scale && size >= 0.5 * last) {
            let f = rm_eval(params, x, mm).ok()?;
            return (f.norm() < cfg.residual_tol).then_some(x);
        }
        // no contraction: the predictor is outside the basin of this root, and
        // whatever Newton lands on may be a neighbouring branch
        if size > 0.8 * last {
            return None;
        }
        last = size;
    }
    None
}

/// Secant extrapolation of the branch to `to` from the last two accepted
/// points; just `x` before there are two.
fn secant(prev: Option<(f64, Complex64)>, alpha: f64, x: Complex64, to: f64) -> Complex64 {
    match prev {
        Some((a, p)) if a != alpha => x + (x - p) * ((to - alpha) / (alpha - a)),
        _ => x,
    }
}

/// Step doubling: reaching `trial` in two half steps must give the same root
/// as the full step, otherwise the full step has hopped to a neighbouring
/// branch (the neighbours get close on the larger knots).
#[allow(clippy::too_many_arguments)]
fn same_root_by_halves(
    params: KnotParams,
    prev: Option<(f64, Complex64)>,
    x: Complex64,
    alpha: f64,
    trial: f64,
    full: Complex64,
    real: bool,
    cfg: &TrackerConfig,
) -> bool {
    let half = 0.5 * (alpha + trial);
    newton(params, secant(prev, alpha, x, half), half, real, cfg)
        .and_then(|mid| newton(params, secant(Some((alpha, x)), half, mid, trial), trial, real, cfg))
        .is_some_and(|two| (two - full).norm() <= 1e-6 * (1.0 + full.norm()))
}

/// Follows the root through each `alpha` of `targets` (a monotone list that
/// continues from `seed_alpha`), halving the step when Newton fails, the jump
/// bound is exceeded, two half steps disagree with the full step, or a
/// hyperbolic root crosses to its conjugate.
pub fn track_through(
    params: KnotParams,
    seed: Complex64,
    seed_alpha: f64,
    targets: &[f64],
    cfg: &TrackerConfig,
) -> Result<BranchPath> {
    let residual = rm_eval(params, seed, meridian(seed_alpha))?.norm();
    if !(residual < cfg.residual_tol) {
        return Err(Error::InvalidArgument(format!(
            "seed {seed} is not a root at alpha = {seed_alpha} (|phi| = {residual:e})"
        )));
    }
    let regime = if seed.im.abs() <= 1e-12 {
        Regime::Spherical
    } else {
        Regime::Hyperbolic
    };
    let real = regime == Regime::Spherical;
    let mut x = if real { Complex64::new(seed.re, 0.0) } else { seed };
    let mut alpha = seed_alpha;
    let mut prev = None;
    let mut samples = Vec::with_capacity(targets.len() + 1);
    samples.push(BranchSample { alpha, x });

    let direction = targets.first().map_or(0.0, |&t| (t - seed_alpha).signum());
    for &target in targets {
        if !((target - alpha) * direction > 0.0) {
            return Err(Error::InvalidArgument(
                "continuation targets must be strictly monotone".into(),
            ));
        }
        let mut sub = (target - alpha).clamp(-MAX_STEP, MAX_STEP);
        let mut halvings = 0;
        while alpha != target {
            let trial = if (target - alpha).abs() <= sub.abs() * (1.0 + 1e-12) {
                target
            } else {
                alpha + sub
            };
            let accepted = newton(params, secant(prev, alpha, x, trial), trial, real, cfg)
                .filter(|xn| (xn - x).norm() < cfg.jump_bound && (real || xn.im.signum() == x.im.signum()))
                .filter(|&xn| same_root_by_halves(params, prev, x, alpha, trial, xn, real, cfg));
            match accepted {
                Some(xn) => {
                    prev = Some((alpha, x));
                    x = xn;
                    alpha = trial;
                }
                None => {
                    halvings += 1;
                    if halvings > cfg.max_halvings {
                        return Err(Error::Continuation {
                            alpha: trial,
                            reason: if real {
                                "real branch lost (branch point crossed without handoff)".into()
                            } else {
                                "newton diverged at minimal step".into()
                            },
                        });
                    }
                    sub /= 2.0;
                }
            }
        }
        samples.push(BranchSample { alpha, x });
    }
    Ok(BranchPath {
        params,
        regime,
        samples,
    })
}

fn uniform_grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    let h = (to - from) / steps as f64;
    (1..=steps)
        .map(|j| if j == steps { to } else { from + h * j as f64 })
        .collect()
}

/// Tracks `seed` from `alpha_from` to `alpha_to` on a uniform grid of `steps`
/// steps with the default configuration.
pub fn track_branch(
    params: KnotParams,
    seed: Complex64,
    alpha_from: f64,
    alpha_to: f64,
    steps: usize,
) -> Result<BranchPath> {
    track_branch_with(params, seed, alpha_from, alpha_to, steps, &TrackerConfig::default())
}

pub fn track_branch_with(
    params: KnotParams,
    seed: Complex64,
    alpha_from: f64,
    alpha_to: f64,
    steps: usize,
    cfg: &TrackerConfig,
) -> Result<BranchPath> {
    if steps > 0 && alpha_from == alpha_to {
        return Err(Error::InvalidArgument("empty continuation range".into()));
    }
    track_through(
        params,
        seed,
        alpha_from,
        &uniform_grid(alpha_from, alpha_to, steps),
        cfg,
    )
}

/// Location of the Euclidean angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha0Result {
    pub alpha0: f64,
    /// `|x1 - x2|` at the upper end of the final bracket.
    pub collision_gap: f64,
    /// The real double root at `alpha0`.
    pub collision_x: f64,
}

/// Real critical point of `phi(., alpha)` near `guess`, with `phi` and
/// `phi''` there. `phi''` comes from a central difference of the analytic
/// derivative; the fixed point `phi' = 0` does not depend on it.
fn critical_point(params: KnotParams, guess: f64, alpha: f64) -> Option<(f64, f64, f64)> {
    let mm = meridian(alpha);
    let dphi = |x: f64| rm_eval_dx(params, Complex64::new(x, 0.0), mm).map(|(_, d)| d.re);
    let second = |x: f64| {
        let h = 1e-5 * (1.0 + x.abs());
        Some((dphi(x + h).ok()? - dphi(x - h).ok()?) / (2.0 * h))
    };
    let mut x = guess;
    for _ in 0..100 {
        let step = dphi(x).ok()? / second(x)?;
        if !step.is_finite() {
            return None;
        }
        x -= step;
        if step.abs() <= 1e-15 * (1.0 + x.abs()) {
            break;
        }
    }
    let f = rm_eval(params, Complex64::new(x, 0.0), mm).ok()?.re;
    Some((x, f, second(x)?))
}

/// `true` when the two real roots around the critical point near `guess` still
/// exist, i.e. `phi * phi'' < 0` there. Returns the critical point too.
fn spherical_at(params: KnotParams, guess: f64, alpha: f64) -> Result<(bool, f64, f64)> {
    let (x, f, f2) = critical_point(params, guess, alpha).ok_or(Error::Continuation {
        alpha,
        reason: "critical point of phi not found near the collision".into(),
    })?;
    let gap = if f * f2 < 0.0 {
        2.0 * (-2.0 * f / f2).sqrt()
    } else {
        0.0
    };
    Ok((f * f2 < 0.0, x, gap))
}

/// Finds the Euclidean angle `alpha0` by bisection on the regime of the
/// geometric pair, continuing both seeds down from `pi`.
pub fn find_alpha0(params: KnotParams, tol: f64) -> Result<Alpha0Result> {
    find_alpha0_with(params, tol, &TrackerConfig::default())
}

pub fn find_alpha0_with(params: KnotParams, tol: f64, cfg: &TrackerConfig) -> Result<Alpha0Result> {
    if !(tol >= 1e-13) {
        return Err(Error::InvalidArgument(format!("alpha0 tolerance {tol} is below 1e-13")));
    }
    let floor = ALPHA0_LOWER - 0.02;
    let (s1, s2) = spherical_seeds(params);
    let mut x1 = Complex64::new(s1, 0.0);
    let mut x2 = Complex64::new(s2, 0.0);
    let h = ((PI - floor) / cfg.steps as f64).min(MAX_STEP);
    let gap_min = 0.02;

    // Approach the collision on the real line while both branches survive.
    let mut hi = PI;
    loop {
        let mut sub = h;
        let mut halvings = 0;
        let advanced = loop {
            let trial = hi - sub;
            if trial <= floor {
                return Err(Error::NoRegimeChange);
            }
            let step1 = newton(params, x1, trial, true, cfg).filter(|x| (x - x1).norm() < cfg.jump_bound);
            let step2 = newton(params, x2, trial, true, cfg).filter(|x| (x - x2).norm() < cfg.jump_bound);
            match (step1, step2) {
                (Some(a), Some(b)) if (a - b).norm() > 1e-12 => break Some((trial, a, b)),
                _ => {
                    halvings += 1;
                    if halvings > cfg.max_halvings {
                        break None;
                    }
                    sub /= 2.0;
                }
            }
        };
        match advanced {
            Some((a, n1, n2)) => {
                hi = a;
                x1 = n1;
                x2 = n2;
                if (x1 - x2).norm() < gap_min {
                    break;
                }
            }
            None => break,
        }
    }

    let (spherical, mut x_hi, mut gap) = spherical_at(params, 0.5 * (x1.re + x2.re), hi)?;
    if !spherical {
        return Err(Error::Continuation {
            alpha: hi,
            reason: "tracked real branches are not adjacent roots".into(),
        });
    }

    // Step down until the pair has turned complex.
    let mut d = h / 16.0;
    let mut lo = hi - d;
    let mut guess = x_hi;
    loop {
        if lo <= floor {
            return Err(Error::NoRegimeChange);
        }
        let (sph, x, g) = spherical_at(params, guess, lo)?;
        if !sph {
            break;
        }
        hi = lo;
        x_hi = x;
        gap = g;
        guess = x;
        d *= 2.0;
        lo = hi - d;
    }

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let (sph, x, g) = spherical_at(params, x_hi, mid)?;
        if sph {
            hi = mid;
            x_hi = x;
            gap = g;
        } else {
            lo = mid;
        }
    }

    let mut alpha0 = 0.5 * (lo + hi);
    if alpha0 < ALPHA0_LOWER {
        if ALPHA0_LOWER - alpha0 <= tol.max(1e-12) {
            alpha0 = ALPHA0_LOWER;
        } else {
            return Err(Error::NoRegimeChange);
        }
    }
    if alpha0 >= PI {
        return Err(Error::NoRegimeChange);
    }
    let collision_x = critical_point(params, x_hi, alpha0).map_or(x_hi, |(x, _, _)| x);
    Ok(Alpha0Result {
        alpha0,
        collision_gap: gap,
        collision_x,
    })
}

/// The geometric component of one knot: its Euclidean angle and the handoff
/// between the spherical pair and the hyperbolic conjugate pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricComponent {
    pub params: KnotParams,
    pub alpha0: Alpha0Result,
    pub config: TrackerConfig,
}

impl GeometricComponent {
    pub fn locate(params: KnotParams, tol: f64, config: TrackerConfig) -> Result<Self> {
        let alpha0 = find_alpha0_with(params, tol, &config)?;
        Ok(Self { params, alpha0, config })
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0.alpha0
    }

    /// Starting point of the hyperbolic branch just below `alpha0`: the double
    /// root is split perpendicular to the real axis, re-converged by Newton,
    /// and the member satisfying the sign condition is kept.
    pub fn hyperbolic_seed(&self) -> Result<BranchSample> {
        let alpha = self.alpha0() - self.config.hyperbolic_offset;
        let fail = |reason: &str| Error::Continuation {
            alpha,
            reason: reason.into(),
        };
        let (xc, f, f2) = critical_point(self.params, self.alpha0.collision_x, alpha)
            .ok_or_else(|| fail("critical point lost below alpha0"))?;
        if f * f2 <= 0.0 {
            return Err(fail("pair is still real below alpha0"));
        }
        let split = (2.0 * f / f2).sqrt();
        let x = newton(self.params, Complex64::new(xc, split), alpha, false, &self.config)
            .filter(|x| x.im.abs() > 0.1 * split)
            .ok_or_else(|| fail("newton failed on the split double root"))?;
        let x = if geometric_sign(self.params, x, alpha) >= 0.0 {
            x
        } else {
            x.conj()
        };
        Ok(BranchSample { alpha, x })
    }

    /// Hyperbolic branch from just below `alpha0` through `targets`
    /// (decreasing, all below `alpha0`).
    pub fn hyperbolic_through(&self, targets: &[f64]) -> Result<BranchPath> {
        let seed = self.hyperbolic_seed()?;
        let targets: Vec<f64> = targets.iter().copied().filter(|&a| a < seed.alpha).collect();
        track_through(self.params, seed.x, seed.alpha, &targets, &self.config)
    }

    /// Both spherical branches from `pi` through `targets` (decreasing, all
    /// above `alpha0`).
    pub fn spherical_through(&self, targets: &[f64]) -> Result<(BranchPath, BranchPath)> {
        let (s1, s2) = spherical_seeds(self.params);
        let targets: Vec<f64> = targets.iter().copied().filter(|&a| a < PI).collect();
        let p1 = track_through(self.params, Complex64::new(s1, 0.0), PI, &targets, &self.config)?;
        let p2 = track_through(self.params, Complex64::new(s2, 0.0), PI, &targets, &self.config)?;
        Ok((p1, p2))
    }

    /// Geometric root at a hyperbolic cone angle.
    pub fn geometric_root(&self, alpha: f64) -> Result<Complex64> {
        let seed_alpha = self.alpha0() - self.config.hyperbolic_offset;
        if !(alpha > 0.0 && alpha < self.alpha0()) {
            return Err(Error::NotHyperbolic {
                alpha,
                alpha0: self.alpha0(),
            });
        }
        let seed = self.hyperbolic_seed()?;
        if alpha >= seed_alpha {
            return Ok(seed.x);
        }
        let steps = ((self.config.steps as f64) * (seed_alpha - alpha) / PI).ceil().max(1.0) as usize;
        let path = track_branch_with(self.params, seed.x, seed.alpha, alpha, steps, &self.config)?;
        Ok(path.last().x)
    }
}

/// Geometric root of `phi` at a hyperbolic cone angle `0 < alpha < alpha0`.
pub fn geometric_root(params: KnotParams, alpha: f64) -> Result<Complex64> {
    GeometricComponent::locate(params, 1e-12, TrackerConfig::default())?.geometric_root(alpha)
}
