use thiserror::Error;

/// Everything that can go wrong while computing an invariant.
///
/// Variants split into domain errors (the request itself is invalid, such as a
/// non-hyperbolic orbifold) and numerical failures (a solver did not converge).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid knot parameters: n = {n}, m = {m} (both must be at least 1)")]
    InvalidParams { n: i64, m: i64 },

    #[error("matrix is not unimodular: det = {det}")]
    NotUnimodular { det: num_complex::Complex64 },

    #[error("meridian eigenvalue M must be nonzero")]
    ZeroMeridian,

    #[error("interpolation for the coefficients of phi is numerically singular")]
    SingularInterpolation,

    #[error("root finder did not converge after {iterations} iterations")]
    RootsNotConverged { iterations: usize },

    #[error("continuation failed at alpha = {alpha}: {reason}")]
    Continuation { alpha: f64, reason: String },

    #[error("no regime change found in [2pi/3, pi)")]
    NoRegimeChange,

    #[error("alpha = {alpha} is outside the hyperbolic range (0, {alpha0})")]
    NotHyperbolic { alpha: f64, alpha0: f64 },

    #[error(
        "orbifold with cone angle 2pi/{k} is not hyperbolic: 2pi/{k} = {cone_angle} is not below alpha0 = {alpha0}"
    )]
    NonHyperbolicOrbifold { k: u32, cone_angle: f64, alpha0: f64 },

    #[error("invalid orbifold index k = {0} (must be at least 3)")]
    InvalidOrbifoldIndex(u32),

    #[error("longitude denominator vanishes")]
    DegenerateLongitude,

    #[error("simpson rule needs an even number of intervals >= 2, got {0}")]
    BadIntervalCount(usize),

    #[error("integrand is not finite at alpha = {0}")]
    NonFiniteIntegrand(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by the request rather than by the numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::InvalidParams { .. }
                | Error::NotHyperbolic { .. }
                | Error::NonHyperbolicOrbifold { .. }
                | Error::InvalidOrbifoldIndex(_)
                | Error::BadIntervalCount(_)
                | Error::InvalidArgument(_)
                | Error::ZeroMeridian
                | Error::NotUnimodular { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
