//! Bertrand-type mates of Legendre curves and of regular curves.
//!
//! A mate of `(γ, ν)` is `γ̄ = γ + λv` with `v = cos θ ν + sin θ μ`, carrying
//! the normal `ν̄ = cos(θ-τ) ν + sin(θ-τ) μ`, so that `v` equals
//! `w̄ = cos τ ν̄ + sin τ μ̄`. The pair `(θ, τ)` selects the operator and the
//! distance `λ` solves
//!
//! ```text
//! (β sin θ + λ̇) cos τ - (β cos θ + λ(θ̇ + ℓ)) sin τ = 0.
//! ```

mod lambda;
mod mate;
mod regular;
mod special;

pub use lambda::{solve_lambda, LambdaSolution};
pub use mate::{
    build_mate, compose_mates, inverse_mate, mate_curvature, mate_relation, round_trip_error,
    verify_mate_curvature, Composition, MatePair, MateRelation, RoundTrip,
};
pub use regular::{
    check_regular_bertrand, regular_to_legendre_mates, RegularBertrandReport, RegularMateData,
    RegularMatePoint,
};
pub use special::{special_curvature, special_operator, SpecialOp};

use crate::plane::AngleFn;
use crate::scalar::Real;

/// `|cos τ|` at or below this counts as zero.
pub const ANGLE_TOL: f64 = 1e-6;
/// Position tolerance relative to the source diameter, closed-form sources.
pub const MATE_REL_ANALYTIC: f64 = 1e-6;
/// Position tolerance relative to the source diameter, sampled sources.
pub const MATE_REL_SAMPLED: f64 = 1e-3;
/// Residual tolerance of the distance equation, relative to its scale.
pub const ODE_REL: f64 = 1e-7;
/// `max |λ|` below this fraction of the diameter flags a vanishing distance.
pub const LAMBDA_VANISH_REL: f64 = 1e-10;

/// How `λ` is obtained from the distance equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolveMode {
    /// Integrate `λ̇ = tan τ (β cos θ + λ(θ̇ + ℓ)) - β sin θ`; needs `cos τ ≠ 0`.
    Ode,
    /// `λ = -β cos θ / (θ̇ + ℓ)`; needs `cos τ ≡ 0`.
    Algebraic,
    /// Picks one of the above from `cos τ` on the grid.
    Auto,
}

impl SolveMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMode::Ode => "ode",
            SolveMode::Algebraic => "algebraic",
            SolveMode::Auto => "auto",
        }
    }
}

impl std::str::FromStr for SolveMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "ode" => Ok(SolveMode::Ode),
            "algebraic" => Ok(SolveMode::Algebraic),
            "auto" => Ok(SolveMode::Auto),
            other => Err(crate::Error::InvalidParameter(format!(
                "unknown mode `{other}` (expected ode, algebraic or auto)"
            ))),
        }
    }
}

/// Angles `(θ, τ)`, the initial distance `λ(t_start)` and the solve mode.
#[derive(Clone, Debug)]
pub struct MateConfig<T: Real> {
    pub theta: AngleFn<T>,
    pub tau: AngleFn<T>,
    /// `λ(t_start)`; ignored in algebraic mode.
    pub lambda0: T,
    pub mode: SolveMode,
}

impl<T: Real> MateConfig<T> {
    pub fn new(theta: AngleFn<T>, tau: AngleFn<T>, lambda0: T, mode: SolveMode) -> Self {
        MateConfig {
            theta,
            tau,
            lambda0,
            mode,
        }
    }

    /// Constant angles, `λ(t_start) = lambda0`, automatic mode.
    pub fn constant(theta: T, tau: T, lambda0: T) -> Self {
        Self::new(
            AngleFn::constant(theta),
            AngleFn::constant(tau),
            lambda0,
            SolveMode::Auto,
        )
    }

    /// Configuration of the inverse operation: `θ` and `τ` swapped.
    pub fn swapped(&self) -> Self {
        MateConfig {
            theta: self.tau.clone(),
            tau: self.theta.clone(),
            lambda0: -self.lambda0,
            mode: self.mode,
        }
    }
}

/// Position tolerance for mates of a source with the given diameter.
pub fn mate_tol<T: Real>(diameter: T, analytic: bool) -> T {
    let rel = if analytic {
        MATE_REL_ANALYTIC
    } else {
        MATE_REL_SAMPLED
    };
    T::lit(rel) * diameter
}
