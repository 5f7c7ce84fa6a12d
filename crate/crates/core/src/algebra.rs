//! Chebyshev-type polynomials `S_k(v)` and the SL(2, C) matrices built from them.
//!
//! `S_k` is defined for every integer `k` by `S_0 = 1`, `S_1 = v` and
//! `S_k = v S_{k-1} - S_{k-2}`. Running the recurrence backwards gives
//! `S_{-1} = 0` and `S_k = -S_{-k-2}` for `k <= -2`.

use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rmpoly::KnotParams;

/// Evaluates `S_k(v)`.
pub fn cheb(k: i64, v: Complex64) -> Complex64 {
    cheb_with_deriv(k, v).0
}

/// Evaluates `S_k(v)` together with `S_k'(v)`.
///
/// The derivative follows the differentiated recurrence
/// `S_k' = S_{k-1} + v S_{k-1}' - S_{k-2}'` with `S_0' = 0`, `S_1' = 1`.
pub fn cheb_with_deriv(k: i64, v: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match k {
        -1 => return (zero, zero),
        k if k < -1 => {
            let (s, ds) = cheb_with_deriv(-k - 2, v);
            return (-s, -ds);
        }
        0 => return (one, zero),
        _ => {}
    }
    // (S_{j-1}, S_j) and their derivatives
    let (mut s_prev, mut s) = (one, v);
    let (mut ds_prev, mut ds) = (zero, one);
    for _ in 1..k {
        let s_next = v * s - s_prev;
        let ds_next = s + v * ds - ds_prev;
        s_prev = s;
        s = s_next;
        ds_prev = ds;
        ds = ds_next;
    }
    (s, ds)
}

/// A 2x2 complex matrix with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2Matrix {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Tolerance on `|det - 1|` accepted by [`Sl2Matrix::new`].
pub const DET_TOLERANCE: f64 = 1e-10;

impl Sl2Matrix {
    /// Builds a matrix, checking `|ad - bc - 1| <= 1e-10`.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let m = Self::new_unchecked(a, b, c, d);
        let det = m.det();
        if (det - 1.0).norm() > DET_TOLERANCE * (1.0 + m.max_norm()) || !det.is_finite() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(m)
    }

    pub const fn new_unchecked(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::new_unchecked(one, zero, zero, one)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Inverse, using `det = 1`.
    pub fn inv(&self) -> Self {
        Self::new_unchecked(self.d, -self.b, -self.c, self.a)
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        [self.a, self.b, self.c, self.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Max-entry distance to another matrix.
    pub fn dist(&self, other: &Self) -> f64 {
        [self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `V^k` from the Chebyshev formula
    ///
    /// ```text
    /// V^k = [ S_k - d S_{k-1}    b S_{k-1}      ]
    ///       [ c S_{k-1}          S_k - a S_{k-1} ]
    /// ```
    ///
    /// with `v = tr V`. Valid for negative `k` as well.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let det = self.det();
        if (det - 1.0).norm() > DET_TOLERANCE * (1.0 + self.max_norm()) || !det.is_finite() {
            return Err(Error::NotUnimodular { det });
        }
        let v = self.trace();
        let sk = cheb(k, v);
        let sk1 = cheb(k - 1, v);
        Ok(Self::new_unchecked(
            sk - self.d * sk1,
            self.b * sk1,
            self.c * sk1,
            sk - self.a * sk1,
        ))
    }
}

impl Mul for Sl2Matrix {
    type Output = Sl2Matrix;

    fn mul(self, rhs: Sl2Matrix) -> Sl2Matrix {
        Sl2Matrix::new_unchecked(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

/// Free function form of [`Sl2Matrix::pow`].
pub fn mat_pow(v: &Sl2Matrix, k: i64) -> Result<Sl2Matrix> {
    v.pow(k)
}

/// Images of the generators and of the words `w`, `w*` under the
/// representation with meridian eigenvalue `M` and trace coordinate `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Holonomy {
    /// `rho(s) = [M 1; 0 1/M]`
    pub s: Sl2Matrix,
    /// `rho(t) = [M 0; 2-v 1/M]`
    pub t: Sl2Matrix,
    /// `rho(w)` with `w = (t^-1 s)^n (t s^-1)^n`
    pub w: Sl2Matrix,
    /// `rho(w*)`, `w*` being `w` read backwards
    pub w_star: Sl2Matrix,
    /// `tr W`
    pub z: Complex64,
    /// `v = x + M^2 + M^-2`
    pub v: Complex64,
}

/// Closed-form entries `(W11, W12, W22)` of `rho(w)`; `W21 = (2 - v) W12`.
///
/// The entries of `rho(w*)` are the same expressions with `M` replaced by `1/M`,
/// arranged as `[W~22 W~12; (2-v) W~12 W~11]`.
pub(crate) fn w_entries(n: i64, v: Complex64, mm: Complex64) -> (Complex64, Complex64, Complex64) {
    let sn = cheb(n, v);
    let sn1 = cheb(n - 1, v);
    let m2 = mm * mm;
    let m_inv = mm.inv();
    let m_inv2 = m_inv * m_inv;
    let w11 = sn * sn + (2.0 - 2.0 * v) * sn * sn1 + (1.0 + 2.0 * m_inv2 - 2.0 * v - m_inv2 * v + v * v) * sn1 * sn1;
    let w12 = (m_inv - mm) * sn * sn1 + (mm * v - mm - m_inv) * sn1 * sn1;
    let w22 = sn * sn - 2.0 * sn * sn1 + (1.0 + 2.0 * m2 - m2 * v) * sn1 * sn1;
    (w11, w12, w22)
}

/// Builds `S`, `T`, `W`, `W*` and `z = tr W` for the knot `J(2n, -2m)`.
pub fn build_holonomy(params: KnotParams, x: Complex64, mm: Complex64) -> Result<Holonomy> {
    if mm.norm() == 0.0 || !mm.is_finite() {
        return Err(Error::ZeroMeridian);
    }
    let n = i64::from(params.n());
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let m_inv = mm.inv();
    let v = x + mm * mm + m_inv * m_inv;

    let s = Sl2Matrix::new_unchecked(mm, one, zero, m_inv);
    let t = Sl2Matrix::new_unchecked(mm, zero, 2.0 - v, m_inv);

    let (w11, w12, w22) = w_entries(n, v, mm);
    let w = Sl2Matrix::new_unchecked(w11, w12, (2.0 - v) * w12, w22);
    let (t11, t12, t22) = w_entries(n, v, m_inv);
    let w_star = Sl2Matrix::new_unchecked(t22, t12, (2.0 - v) * t12, t11);

    let sn1 = cheb(n - 1, v);
    let z = 2.0 + (v - 2.0) * x * sn1 * sn1;

    Ok(Holonomy { s, t, w, w_star, z, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn base_cases() {
        let v = c(0.3, -1.7);
        assert_eq!(cheb(0, v), c(1.0, 0.0));
        assert_eq!(cheb(1, v), v);
        assert_eq!(cheb(-1, v), c(0.0, 0.0));
        assert_eq!(cheb(-2, v), c(-1.0, 0.0));
    }

    #[test]
    fn trigonometric_closed_form() {
        let theta: f64 = 0.7;
        let v = c(2.0 * theta.cos(), 0.0);
        let expected = (6.0 * theta).sin() / theta.sin();
        assert_abs_diff_eq!(cheb(5, v).re, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(cheb(5, v).im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn moderate_index_stays_accurate() {
        // S_k(2 cos t) = sin((k+1) t) / sin t at |k| = 64
        let theta: f64 = 1.234;
        let v = c(2.0 * theta.cos(), 0.0);
        let expected = (65.0 * theta).sin() / theta.sin();
        assert_abs_diff_eq!(cheb(64, v).re, expected, epsilon = 1e-11);
        assert_abs_diff_eq!(cheb(-66, v).re, -expected, epsilon = 1e-11);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let v = c(0.4, 0.9);
        let h = 1e-6;
        for k in -6..9 {
            let (_, ds) = cheb_with_deriv(k, v);
            let fd = (cheb(k, v + h) - cheb(k, v - h)) / (2.0 * h);
            assert!((ds - fd).norm() < 1e-6 * (1.0 + fd.norm()), "k = {k}");
        }
    }

    #[test]
    fn power_edge_cases() {
        let v = Sl2Matrix::new(c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(v.pow(0).unwrap().dist(&Sl2Matrix::identity()) < 1e-15);
        assert!(v.pow(1).unwrap().dist(&v) < 1e-15);
        assert!(v.pow(-1).unwrap().dist(&v.inv()) < 1e-14);
        let direct = v * v * v * v * v;
        assert!(v.pow(5).unwrap().dist(&direct) < 1e-10);
    }

    #[test]
    fn power_rejects_non_unimodular() {
        let v = Sl2Matrix::new_unchecked(c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0));
        assert!(matches!(v.pow(3), Err(Error::NotUnimodular { .. })));
        assert!(Sl2Matrix::new(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)).is_err());
    }

    #[test]
    fn trace_of_generator_products() {
        let p = KnotParams::new(1, 1).unwrap();
        let mm = Complex64::from_polar(1.0, 0.4);
        let h = build_holonomy(p, c(0.5, 0.3), mm).unwrap();
        assert!(((h.t.inv() * h.s).trace() - h.v).norm() < 1e-12);
        assert!(((h.t * h.s.inv()).trace() - h.v).norm() < 1e-12);
    }

    #[test]
    fn zero_meridian_is_rejected() {
        let p = KnotParams::new(1, 1).unwrap();
        assert_eq!(build_holonomy(p, c(0.5, 0.0), c(0.0, 0.0)), Err(Error::ZeroMeridian));
    }
}
