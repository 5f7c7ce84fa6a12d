mod common;

use std::f64::consts::PI;

use jknot_cs::tracker::all_roots;
use jknot_cs::{meridian, rep_residual, rm_coeffs, rm_dx, rm_eval, Complex64, TracePoint};
use proptest::prelude::*;

use common::knot;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// Roots of `phi` are exactly the points where the relation holds.
    #[test]
    fn roots_are_representations(n in 1u32..=3, m in 1u32..=3, alpha in 0.1..PI, pick in 0usize..18) {
        let p = knot(n, m);
        let mm = meridian(alpha);
        let roots = all_roots(p, mm).unwrap();
        let x = roots[pick % roots.len()];
        prop_assert!(rm_eval(p, x, mm).unwrap().norm() < 1e-8);
        prop_assert!(rep_residual(p, x, mm).unwrap() < 1e-8);
        let off = x + 0.1;
        if rm_eval(p, off, mm).unwrap().norm() >= 1e-8 {
            prop_assert!(rep_residual(p, off, mm).unwrap() >= 1e-8);
        }
    }

    #[test]
    fn degree_and_leading_coefficient(n in 1u32..=4, m in 1u32..=4, alpha in 0.1..=PI) {
        let poly = rm_coeffs(knot(n, m), meridian(alpha)).unwrap();
        prop_assert_eq!(poly.coefficients.len(), (2 * n * m + 1) as usize);
        prop_assert!(poly.leading().norm() > 1e-6);
    }

    /// The monomial form keeps 1e-8 relative accuracy up to degree 12; past
    /// that the coefficients themselves are too large for double precision.
    #[test]
    fn coefficient_form_agrees(
        (n, m) in prop_oneof![Just((1u32, 1u32)), Just((1, 2)), Just((2, 1)), Just((2, 2)), Just((1, 3)), Just((3, 1)), Just((2, 3)), Just((3, 2))],
        alpha in 0.1..=PI,
        r in 0.0..4.0f64,
        th in 0.0..(2.0 * PI),
    ) {
        let p = knot(n, m);
        let mm = meridian(alpha);
        let x = Complex64::from_polar(r, th);
        let want = rm_eval(p, x, mm).unwrap();
        let got = rm_coeffs(p, mm).unwrap().eval(x);
        prop_assert!((got - want).norm() <= 1e-8 * want.norm().max(1e-3), "{got} vs {want}");
    }

    #[test]
    fn derivative_matches_difference(n in 1u32..=4, m in 1u32..=4, x in (-2.0..2.0, -1.0..1.0f64), alpha in 0.0..PI) {
        let p = knot(n, m);
        let x = c(x.0, x.1);
        let mm = meridian(alpha);
        let h = 1e-6;
        let fd = (rm_eval(p, x + h, mm).unwrap() - rm_eval(p, x - h, mm).unwrap()) / (2.0 * h);
        let d = rm_dx(p, x, mm).unwrap();
        prop_assert!((fd - d).norm() <= 1e-5 * (1.0 + d.norm()));
    }

    #[test]
    fn trace_point_invariants(n in 1u32..=4, alpha in 0.0..PI, x in (-3.0..3.0, -3.0..3.0f64)) {
        let t = TracePoint::new(knot(n, 1), alpha, c(x.0, x.1));
        let m2 = t.meridian * t.meridian;
        prop_assert!((t.meridian.norm() - 1.0).abs() < 1e-14);
        prop_assert!((t.v - (t.x + m2 + m2.inv())).norm() < 1e-12);
        let s = jknot_cs::cheb(i64::from(n) - 1, t.v);
        let z = 2.0 + (t.v - 2.0) * t.x * s * s;
        prop_assert!((t.z - z).norm() < 1e-10 * (1.0 + z.norm()));
    }
}

/// The monomial coefficients of the larger knots are too inaccurate to locate
/// roots on their own; the returned roots must still be roots of `phi`.
#[test]
fn all_roots_accurate_for_large_knots() {
    for (n, m) in [(3, 3), (4, 2), (4, 3), (4, 4), (4, 6), (6, 6)] {
        let p = knot(n, m);
        for alpha in [0.1, 1.0, 2.0, 3.0, PI] {
            let mm = meridian(alpha);
            let roots = all_roots(p, mm).unwrap();
            assert_eq!(roots.len(), p.degree());
            for &x in &roots {
                let f = rm_eval(p, x, mm).unwrap().norm();
                assert!(f < 1e-9, "J({n},{m}) alpha={alpha} x={x}: |phi| = {f:e}");
            }
            // two starts collapsing onto one root would also pass the residual
            if alpha == 1.0 || alpha == 2.0 {
                for (i, a) in roots.iter().enumerate() {
                    for b in &roots[i + 1..] {
                        assert!((a - b).norm() > 1e-6, "J({n},{m}) alpha={alpha}: repeated root {a}");
                    }
                }
            }
        }
    }
}

#[test]
fn roots_at_alpha_two() {
    let p = knot(2, 1);
    let mm = meridian(2.0);
    for x in all_roots(p, mm).unwrap() {
        assert!(rep_residual(p, x, mm).unwrap() < 1e-8);
        assert!(rep_residual(p, x + 0.1, mm).unwrap() > 1e-3);
    }
}

#[test]
fn root_count() {
    assert_eq!(all_roots(knot(3, 2), meridian(2.5)).unwrap().len(), 12);
    assert_eq!(rm_coeffs(knot(3, 2), meridian(2.5)).unwrap().coefficients.len(), 13);
}
