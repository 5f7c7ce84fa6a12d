//! Chern-Simons invariants of hyperbolic cone-manifolds, orbifolds and cyclic
//! covers of the two-bridge knots `J(2n, -2m)`.
//!
//! The geometric root of the representation polynomial is followed from the
//! spherical seeds at `alpha = pi` through the Euclidean angle `alpha0` into the
//! hyperbolic range, and the Schlafli integrand built from the longitude
//! eigenvalue is integrated along it with composite Simpson quadrature.
//!
//! ```no_run
//! use jknot_cs::{cs, KnotParams};
//!
//! let knot = KnotParams::new(2, 1).unwrap();
//! let value = cs::cs_knot(knot, cs::KNOT_INTERVALS, cs::KNOT_INTERVALS).unwrap();
//! println!("cs = {} mod {}", value.value, value.modulus);
//! ```

// `!(x < tol)` style comparisons are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cs;
pub mod error;
pub mod rmpoly;
pub mod roots;
pub mod schlafli;
pub mod tracker;

pub use algebra::{build_holonomy, cheb, mat_pow, Holonomy, Sl2Matrix};
pub use cs::{ModValue, OrbifoldSpec};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use rmpoly::{meridian, rep_residual, rm_coeffs, rm_dx, rm_eval, KnotParams, PolyCoeffs, TracePoint};
pub use tracker::{
    all_roots, find_alpha0, geometric_root, spherical_seeds, track_branch, Alpha0Result, BranchPath, BranchSample,
    GeometricComponent, Regime, TrackerConfig,
};
