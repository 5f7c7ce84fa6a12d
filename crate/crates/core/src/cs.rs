//! Chern-Simons invariants assembled from the lens-space value at `alpha = pi`
//! and the Schlafli integrals down to the target cone angle:
//!
//! ```text
//! I(2pi/k) = cs(L(4nm+1, 2n(2m-1)+1)) / 2
//!          + (1/4pi^2) int_{2pi/k}^{alpha0} 2 arg L(v) d alpha
//!          + (1/4pi^2) int_{alpha0}^{pi} (arg L(v1) + arg L(v2)) d alpha
//! ```
//!
//! read mod `1/k` for even `k` and mod `1/2k` for odd `k`. The complete
//! structure (`alpha -> 0`) is read mod `1/2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::rmpoly::KnotParams;
use crate::schlafli::{integrate_hyperbolic, integrate_spherical};
use crate::tracker::{GeometricComponent, TrackerConfig};

/// Simpson intervals per range for orbifolds.
pub const ORBIFOLD_INTERVALS: usize = 200;
/// Simpson intervals per range for the complete structure.
pub const KNOT_INTERVALS: usize = 20_000;
/// Default bisection tolerance for `alpha0`.
pub const ALPHA0_TOL: f64 = 1e-12;
/// Margin by which `2pi/k` must undercut `alpha0`.
pub const HYPERBOLICITY_MARGIN: f64 = 1e-9;

/// `value - modulus * floor(value / modulus)`, in `[0, modulus)`.
pub fn mod_reduce(value: f64, modulus: f64) -> f64 {
    let r = value - modulus * (value / modulus).floor();
    if r >= modulus || r < 0.0 {
        0.0
    } else {
        r
    }
}

/// A real number read modulo `modulus`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModValue {
    pub value: f64,
    pub modulus: f64,
}

impl ModValue {
    /// Reduces `value` into `[0, modulus)`. A result within `1e-12` (relative)
    /// of either end is the class of zero and is stored as `0`.
    pub fn new(value: f64, modulus: f64) -> Self {
        let r = mod_reduce(value, modulus);
        Self {
            value: if r.min(modulus - r) <= 1e-12 * modulus { 0.0 } else { r },
            modulus,
        }
    }

    /// Distance to `other` on the circle of circumference `modulus`.
    pub fn circular_distance(&self, other: f64) -> f64 {
        let d = mod_reduce(self.value - other, self.modulus);
        d.min(self.modulus - d)
    }

    /// Like [`circular_distance`](Self::circular_distance) but also accepts the
    /// mirror-image representative `-other`.
    pub fn distance_up_to_sign(&self, other: f64) -> f64 {
        self.circular_distance(other).min(self.circular_distance(-other))
    }
}

/// Modulus of `cs(X(2pi/k))`: `1/k` for even `k`, `1/2k` for odd `k`.
pub fn orbifold_modulus(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0 / f64::from(k)
    } else {
        1.0 / (2.0 * f64::from(k))
    }
}

/// Modulus of the `k`-fold cyclic cover: `1` for even `k`, `1/2` for odd `k`.
pub fn cover_modulus(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        0.5
    }
}

/// `(m - n) / (4nm + 1)` as a reduced-mod-1 fraction `(numerator, denominator)`.
pub fn lens_cs_fraction(params: KnotParams) -> (u64, u64) {
    let den = params.determinant();
    let num = (i64::from(params.m()) - i64::from(params.n())).rem_euclid(den as i64) as u64;
    (num, den)
}

/// `cs(L(4nm+1, 2n(2m-1)+1)) = (m - n)/(4nm + 1) mod 1`.
pub fn lens_cs(params: KnotParams) -> ModValue {
    let (num, den) = lens_cs_fraction(params);
    ModValue::new(num as f64 / den as f64, 1.0)
}

/// Orbifold `X(2pi/k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbifoldSpec {
    pub params: KnotParams,
    pub k: u32,
}

impl OrbifoldSpec {
    pub fn new(params: KnotParams, k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidOrbifoldIndex(k));
        }
        Ok(Self { params, k })
    }

    pub fn cone_angle(&self) -> f64 {
        2.0 * PI / f64::from(self.k)
    }

    /// Checks `2pi/k < alpha0`.
    pub fn check_hyperbolic(&self, alpha0: f64) -> Result<()> {
        if self.cone_angle() < alpha0 - HYPERBOLICITY_MARGIN {
            Ok(())
        } else {
            Err(Error::NonHyperbolicOrbifold {
                k: self.k,
                cone_angle: self.cone_angle(),
                alpha0,
            })
        }
    }
}

/// Unreduced generalized Chern-Simons value at cone angle `lower`.
pub fn generalized_cs(
    comp: &GeometricComponent,
    lower: f64,
    hyp_intervals: usize,
    sph_intervals: usize,
) -> Result<f64> {
    let hyp = integrate_hyperbolic(comp, lower, hyp_intervals)?;
    let sph = integrate_spherical(comp, sph_intervals)?;
    let (num, den) = lens_cs_fraction(comp.params);
    Ok(0.5 * num as f64 / den as f64 + (hyp + sph) / (4.0 * PI * PI))
}

fn locate(params: KnotParams) -> Result<GeometricComponent> {
    GeometricComponent::locate(params, ALPHA0_TOL, TrackerConfig::default())
}

/// `cs(X(2pi/k))` reduced mod `1/k` (even `k`) or `1/2k` (odd `k`).
pub fn cs_orbifold(spec: OrbifoldSpec, hyp_intervals: usize, sph_intervals: usize) -> Result<ModValue> {
    cs_orbifold_on(&locate(spec.params)?, spec.k, hyp_intervals, sph_intervals)
}

/// [`cs_orbifold`] reusing an already located component.
pub fn cs_orbifold_on(
    comp: &GeometricComponent,
    k: u32,
    hyp_intervals: usize,
    sph_intervals: usize,
) -> Result<ModValue> {
    let spec = OrbifoldSpec::new(comp.params, k)?;
    spec.check_hyperbolic(comp.alpha0())?;
    let raw = generalized_cs(comp, spec.cone_angle(), hyp_intervals, sph_intervals)?;
    Ok(ModValue::new(raw, orbifold_modulus(k)))
}

/// `cs` of the complete hyperbolic structure on the knot complement, mod `1/2`.
pub fn cs_knot(params: KnotParams, hyp_intervals: usize, sph_intervals: usize) -> Result<ModValue> {
    cs_knot_on(&locate(params)?, hyp_intervals, sph_intervals)
}

pub fn cs_knot_on(comp: &GeometricComponent, hyp_intervals: usize, sph_intervals: usize) -> Result<ModValue> {
    let raw = generalized_cs(comp, 0.0, hyp_intervals, sph_intervals)?;
    Ok(ModValue::new(raw, 0.5))
}

/// `k * cs(X(2pi/k))` read mod `1` (even `k`) or `1/2` (odd `k`).
pub fn cover_from_orbifold(orbifold: ModValue, k: u32) -> ModValue {
    ModValue::new(f64::from(k) * orbifold.value, cover_modulus(k))
}

/// `cs` of the `k`-fold cyclic cover `M_k` of `X(2pi/k)`.
pub fn cs_cover(spec: OrbifoldSpec, hyp_intervals: usize, sph_intervals: usize) -> Result<ModValue> {
    let orb = cs_orbifold(spec, hyp_intervals, sph_intervals)?;
    Ok(cover_from_orbifold(orb, spec.k))
}
