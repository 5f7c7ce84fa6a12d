//! Simultaneous root finding for dense complex polynomials (Aberth-Ehrlich).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rmpoly::PolyCoeffs;

/// Default iteration cap for [`aberth`].
pub const DEFAULT_MAX_ITERATIONS: usize = 500;

fn eval_with_derivative(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Initial guesses spread on a circle whose radius is the geometric mean of the
/// root moduli, rotated off the real axis so conjugate pairs are not started
/// symmetrically.
fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let ratio = (coeffs[0] / coeffs[degree]).norm();
    let radius = if ratio > 0.0 && ratio.is_finite() {
        ratio.powf(1.0 / degree as f64)
    } else {
        1.0
    };
    let offset = 0.4;
    (0..degree)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + offset;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

/// Rounding level of Horner evaluation at `x`: `eps * sum |c_j| |x|^j`.
fn rounding_level(coeffs: &[Complex64], x: Complex64) -> f64 {
    let r = x.norm();
    let bound = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    8.0 * f64::EPSILON * bound
}

/// All roots of `poly`, counted with multiplicity.
///
/// A root stops moving once its correction falls below `1e-14` relative,
/// stagnates below `1e-6` relative, or `|p|` reaches the rounding level of its
/// evaluation. Fails with
/// [`Error::RootsNotConverged`] when some root is still moving after
/// `max_iterations` sweeps.
pub fn aberth(poly: &PolyCoeffs, max_iterations: usize) -> Result<Vec<Complex64>> {
    let coeffs = &poly.coefficients;
    let degree = poly.degree();
    if degree == 0 {
        return Ok(Vec::new());
    }
    if coeffs[degree].norm() == 0.0 {
        return Err(Error::SingularInterpolation);
    }
    aberth_with(
        |z| {
            let (p, dp) = eval_with_derivative(coeffs, z);
            (p, dp, rounding_level(coeffs, z))
        },
        initial_guesses(coeffs),
        max_iterations,
    )
}

/// Aberth-Ehrlich iteration on an arbitrary evaluator returning
/// `(p(z), p'(z), rounding level of p at z)`, started from `guesses`.
pub fn aberth_with<F>(eval: F, guesses: Vec<Complex64>, max_iterations: usize) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> (Complex64, Complex64, f64),
{
    let degree = guesses.len();
    let mut roots = guesses;
    let mut done = vec![false; degree];
    let mut last_step = vec![f64::INFINITY; degree];
    for _ in 0..max_iterations {
        for i in 0..degree {
            if done[i] {
                continue;
            }
            let z = roots[i];
            let (p, dp, noise) = eval(z);
            if p.norm() <= noise {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &r)| (z - r).inv())
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            roots[i] = z - step;
            let size = step.norm();
            let scale = 1.0 + z.norm();
            // stagnation: the step is small but no longer shrinking, i.e. it is
            // dominated by evaluation noise
            if size <= 1e-14 * scale || (size <= 1e-6 * scale && size >= 0.5 * last_step[i]) {
                done[i] = true;
            }
            last_step[i] = size;
        }
        if done.iter().all(|&d| d) {
            return Ok(roots);
        }
    }
    Err(Error::RootsNotConverged {
        iterations: max_iterations,
    })
}
