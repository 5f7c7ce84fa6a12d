//! The representation polynomial of `J(2n, -2m)`:
//!
//! ```text
//! phi(x, M) = S_m(z) + [-1 + x S_{n-1}(v) (S_n(v) + (1 - v) S_{n-1}(v))] S_{m-1}(z)
//! v = x + M^2 + M^-2,   z = 2 + (v - 2) x S_{n-1}(v)^2
//! ```
//!
//! A root `x` is exactly a nonabelian representation of the knot group with
//! meridian eigenvalue `M`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{build_holonomy, cheb, cheb_with_deriv, Sl2Matrix};
use crate::error::{Error, Result};

/// Indexes the knot `J(2n, -2m)`: `2n` vertical and `2m` horizontal crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnotParams {
    n: u32,
    m: u32,
}

impl KnotParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams {
                n: i64::from(n),
                m: i64::from(m),
            });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Degree of `phi` in `x`, which is `2mn`.
    pub fn degree(&self) -> usize {
        2 * self.n as usize * self.m as usize
    }

    /// `4nm + 1`, the order of the lens-space double cover.
    pub fn determinant(&self) -> u64 {
        4 * u64::from(self.n) * u64::from(self.m) + 1
    }

    /// `J(2n,-2n)` is amphicheiral.
    pub fn is_amphicheiral(&self) -> bool {
        self.n == self.m
    }
}

impl std::fmt::Display for KnotParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "J({}, -{})", 2 * self.n, 2 * self.m)
    }
}

/// Meridian eigenvalue `M = e^{i alpha / 2}` at cone angle `alpha`.
pub fn meridian(alpha: f64) -> Complex64 {
    Complex64::from_polar(1.0, alpha / 2.0)
}

/// A cone angle with all the trace coordinates attached to a choice of `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub alpha: f64,
    pub meridian: Complex64,
    pub x: Complex64,
    pub v: Complex64,
    pub z: Complex64,
}

impl TracePoint {
    pub fn new(params: KnotParams, alpha: f64, x: Complex64) -> Self {
        let mm = meridian(alpha);
        let v = x + mm * mm + (mm * mm).inv();
        let sn1 = cheb(i64::from(params.n) - 1, v);
        let z = 2.0 + (v - 2.0) * x * sn1 * sn1;
        Self {
            alpha,
            meridian: mm,
            x,
            v,
            z,
        }
    }
}

fn check_meridian(mm: Complex64) -> Result<()> {
    if mm.norm() == 0.0 || !mm.is_finite() {
        Err(Error::ZeroMeridian)
    } else {
        Ok(())
    }
}

/// Value and `x`-derivative of `phi` in one pass.
fn eval_with_dx(params: KnotParams, x: Complex64, mm: Complex64) -> (Complex64, Complex64) {
    let n = i64::from(params.n);
    let m = i64::from(params.m);
    let m2 = mm * mm;
    let v = x + m2 + m2.inv();

    let (sn, dsn) = cheb_with_deriv(n, v);
    let (sn1, dsn1) = cheb_with_deriv(n - 1, v);

    // z = 2 + (v - 2) x S_{n-1}^2, dv/dx = 1
    let z = 2.0 + (v - 2.0) * x * sn1 * sn1;
    let dz = x * sn1 * sn1 + (v - 2.0) * sn1 * sn1 + (v - 2.0) * x * 2.0 * sn1 * dsn1;

    // bracket = -1 + x S_{n-1} q,  q = S_n + (1 - v) S_{n-1}
    let q = sn + (1.0 - v) * sn1;
    let dq = dsn - sn1 + (1.0 - v) * dsn1;
    let bracket = -1.0 + x * sn1 * q;
    let dbracket = sn1 * q + x * dsn1 * q + x * sn1 * dq;

    let (smz, dsmz) = cheb_with_deriv(m, z);
    let (sm1z, dsm1z) = cheb_with_deriv(m - 1, z);

    let phi = smz + bracket * sm1z;
    let dphi = dsmz * dz + dbracket * sm1z + bracket * dsm1z * dz;
    (phi, dphi)
}

/// `phi(x, M)`.
pub fn rm_eval(params: KnotParams, x: Complex64, mm: Complex64) -> Result<Complex64> {
    check_meridian(mm)?;
    Ok(eval_with_dx(params, x, mm).0)
}

/// `d phi / dx`, computed analytically.
pub fn rm_dx(params: KnotParams, x: Complex64, mm: Complex64) -> Result<Complex64> {
    check_meridian(mm)?;
    Ok(eval_with_dx(params, x, mm).1)
}

/// `(phi, d phi / dx)` at once.
pub fn rm_eval_dx(params: KnotParams, x: Complex64, mm: Complex64) -> Result<(Complex64, Complex64)> {
    check_meridian(mm)?;
    Ok(eval_with_dx(params, x, mm))
}

/// Coefficients of a polynomial in `x`, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoeffs {
    pub coefficients: Vec<Complex64>,
}

impl PolyCoeffs {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coefficients.last().copied().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }
}

/// Radius of the interpolation circle used by [`rm_coeffs`].
pub const INTERPOLATION_RADIUS: f64 = 2.0;

/// Coefficients of `phi(., M)`, found by interpolating at `2mn + 1` points on
/// the circle of radius 2 and inverting the discrete Fourier relations.
pub fn rm_coeffs(params: KnotParams, mm: Complex64) -> Result<PolyCoeffs> {
    check_meridian(mm)?;
    let count = params.degree() + 1;
    let step = 2.0 * PI / count as f64;
    let values: Vec<Complex64> = (0..count)
        .map(|k| {
            let x = Complex64::from_polar(INTERPOLATION_RADIUS, step * k as f64);
            eval_with_dx(params, x, mm).0
        })
        .collect();

    let mut coefficients = Vec::with_capacity(count);
    let mut scale = 1.0;
    for j in 0..count {
        let sum: Complex64 = values
            .iter()
            .enumerate()
            .map(|(k, &f)| f * Complex64::from_polar(1.0, -step * ((j * k) % count) as f64))
            .sum();
        coefficients.push(sum / (count as f64 * scale));
        scale *= INTERPOLATION_RADIUS;
    }

    // The leading coefficient carries an absolute rounding error of about
    // eps * count * max|phi| / r^degree; it must stand clear of that.
    let poly = PolyCoeffs { coefficients };
    let largest = values.iter().map(|f| f.norm()).fold(0.0, f64::max);
    let noise = f64::EPSILON * count as f64 * largest / scale * INTERPOLATION_RADIUS;
    if !largest.is_finite() || !(poly.leading().norm() > 1e3 * noise) {
        return Err(Error::SingularInterpolation);
    }
    Ok(poly)
}

/// Max-entry norm of `rho(s) W^m rho(t)^-1 W^-m - I`, the defect of the single
/// relation of the knot group.
pub fn rep_residual(params: KnotParams, x: Complex64, mm: Complex64) -> Result<f64> {
    let h = build_holonomy(params, x, mm)?;
    let m = i64::from(params.m);
    let wm = h.w.pow(m)?;
    let wm_inv = h.w.pow(-m)?;
    let relator = h.s * wm * h.t.inv() * wm_inv;
    Ok(relator.dist(&Sl2Matrix::identity()))
}
