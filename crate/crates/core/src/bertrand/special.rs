use super::lambda::{solve_lambda, LambdaSolution};
use super::mate::{assemble, MatePair};
use super::{MateConfig, SolveMode};
use crate::error::{Error, Result};
use crate::legendre::{legendre_curvature, CurvaturePair, LegendreCurve};
use crate::plane::AngleFn;
use crate::scalar::Real;

/// Named mates, each a fixed choice of `(θ, τ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpecialOp<T> {
    /// `(0, 0)`, constant `λ = distance`.
    Parallel { distance: T },
    /// `(0, π/2)`, `λ = -β/ℓ`.
    Evolute,
    /// `(π/2, 0)`, `λ̇ = -β`.
    Involute { lambda0: T },
    /// `(θ, π/2)`, `λ = -β cos θ / ℓ`.
    Evolutoid { theta: T },
    /// `(π/2, τ)`, `(β + λ̇) cos τ - λℓ sin τ = 0`.
    Involutoid { tau: T, lambda0: T },
    /// `N[θ]`: `(θ, θ + π/2)`, `β + λ̇ sin θ + λℓ cos θ = 0`.
    N { theta: T, lambda0: T },
    /// `T[τ]`: `(τ + π/2, τ)`, `β + λ̇ cos τ - λℓ sin τ = 0`.
    T { tau: T, lambda0: T },
}

impl<T: Real> SpecialOp<T> {
    /// The angles `(θ, τ)`.
    pub fn angles(&self) -> (T, T) {
        let q = T::frac_pi_2();
        let z = T::zero();
        match *self {
            SpecialOp::Parallel { .. } => (z, z),
            SpecialOp::Evolute => (z, q),
            SpecialOp::Involute { .. } => (q, z),
            SpecialOp::Evolutoid { theta } => (theta, q),
            SpecialOp::Involutoid { tau, .. } => (q, tau),
            SpecialOp::N { theta, .. } => (theta, theta + q),
            SpecialOp::T { tau, .. } => (tau + q, tau),
        }
    }

    /// `λ(t_start)`; unused by the algebraic operators.
    pub fn lambda0(&self) -> T {
        match *self {
            SpecialOp::Parallel { distance } => distance,
            SpecialOp::Evolute | SpecialOp::Evolutoid { .. } => T::zero(),
            SpecialOp::Involute { lambda0 }
            | SpecialOp::Involutoid { lambda0, .. }
            | SpecialOp::N { lambda0, .. }
            | SpecialOp::T { lambda0, .. } => lambda0,
        }
    }

    pub fn config(&self) -> MateConfig<T> {
        let (theta, tau) = self.angles();
        MateConfig::new(
            AngleFn::constant(theta),
            AngleFn::constant(tau),
            self.lambda0(),
            SolveMode::Auto,
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            SpecialOp::Parallel { .. } => "parallel",
            SpecialOp::Evolute => "evolute",
            SpecialOp::Involute { .. } => "involute",
            SpecialOp::Evolutoid { .. } => "evolutoid",
            SpecialOp::Involutoid { .. } => "involutoid",
            SpecialOp::N { .. } => "nvolute",
            SpecialOp::T { .. } => "tvolute",
        }
    }
}

/// Builds the named mate of `lc`.
///
/// Evolutes and evolutoids fail with [`Error::DivisionBlowUp`] when `ℓ` has
/// zeros.
pub fn special_operator<T: Real>(lc: &LegendreCurve<T>, op: SpecialOp<T>) -> Result<MatePair<T>> {
    let cp = legendre_curvature(lc)?;
    let config = op.config();
    let lam = solve_lambda(&cp, &config)?;
    assemble(lc.clone(), cp, config, lam)
}

/// Curvature of a named mate from the per-operator formulas; `ℓ̄ = ℓ` for
/// all of them since the angles are constant.
pub fn special_curvature<T: Real>(
    cp: &CurvaturePair<T>,
    op: SpecialOp<T>,
    lam: &LambdaSolution<T>,
) -> Result<CurvaturePair<T>> {
    if lam.lambda.len() != cp.len() {
        return Err(Error::GridMismatch);
    }
    let beta: Vec<T> = (0..cp.len())
        .map(|i| {
            let (l, b) = (cp.ell[i], cp.beta[i]);
            let (lam, dlam) = (lam.lambda[i], lam.lambda_d1[i]);
            match op {
                SpecialOp::Parallel { .. } => b + lam * l,
                SpecialOp::Evolute => dlam,
                SpecialOp::Evolutoid { theta } => b * theta.sin() + dlam,
                SpecialOp::Involute { .. } => lam * l,
                SpecialOp::Involutoid { tau, .. } => lam * l * tau.cos() + (b + dlam) * tau.sin(),
                SpecialOp::N { theta, .. } => -lam * l * theta.sin() + dlam * theta.cos(),
                SpecialOp::T { tau, .. } => lam * l * tau.cos() + dlam * tau.sin(),
            }
        })
        .collect();
    CurvaturePair::from_samples(lam.interval, cp.ell.clone(), beta)
}
