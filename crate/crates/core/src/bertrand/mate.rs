use super::lambda::{self, from_values, LambdaSolution};
use super::{mate_tol, MateConfig, SolveMode};
use crate::check::Check;
use crate::curve::CurveModel;
use crate::error::{Error, Result};
use crate::legendre::{legendre_curvature, CurvaturePair, LegendreCurve, CROSS_TOL};
use crate::plane::{rotate_by, AngleFn, Vec2};
use crate::scalar::{max_abs, Real};

/// A Legendre curve together with one of its mates.
#[derive(Clone, Debug)]
pub struct MatePair<T: Real> {
    pub source: LegendreCurve<T>,
    pub source_curvature: CurvaturePair<T>,
    pub mate: LegendreCurve<T>,
    pub config: MateConfig<T>,
    pub lambda: LambdaSolution<T>,
    /// `(ℓ̄, β̄)` from the mate curvature formula.
    pub mate_curvature: CurvaturePair<T>,
    /// `λ ≢ 0` advisory: `max |λ|` is negligible against the source size.
    pub lambda_vanishes: bool,
    /// Position tolerance: `1e-6` (closed-form source) or `1e-3` (sampled)
    /// times the source diameter.
    pub mate_tol: T,
}

impl<T: Real> MatePair<T> {
    /// Dimensionless tolerance for unit directions.
    pub fn direction_tol(&self) -> T {
        mate_tol(T::one(), self.source.is_analytic())
    }

    /// `v = cos θ ν + sin θ μ` at grid index `i`.
    pub fn v_at(&self, i: usize) -> Vec2<T> {
        let t = self.source.grid()[i];
        rotate_by(self.source.nu(t), self.config.theta.eval(t))
    }

    /// `w̄ = cos τ ν̄ + sin τ μ̄` at grid index `i`.
    pub fn w_bar_at(&self, i: usize) -> Vec2<T> {
        let t = self.mate.grid()[i];
        rotate_by(self.mate.nu(t), self.config.tau.eval(self.source.grid()[i]))
    }

    /// `max |v - w̄|` against [`MatePair::direction_tol`].
    pub fn direction_check(&self) -> Check<T> {
        let worst = (0..self.lambda.grid.len())
            .map(|i| (self.v_at(i) - self.w_bar_at(i)).norm())
            .fold(T::zero(), T::max);
        Check::new(worst, self.direction_tol())
    }

    /// `max |γ̄ - γ - λv|` against `mate_tol`.
    pub fn position_check(&self) -> Check<T> {
        let (gs, gm) = (self.source.grid(), self.mate.grid());
        let worst = (0..gs.len())
            .map(|i| {
                let expect = self.source.position(gs[i]) + self.v_at(i) * self.lambda.lambda[i];
                (self.mate.position(gm[i]) - expect).norm()
            })
            .fold(T::zero(), T::max);
        Check::new(worst, self.mate_tol)
    }

    /// Tangency `|γ̄̇ · ν̄|` of the mate.
    pub fn tangency_check(&self) -> Check<T> {
        self.mate.tangency_check()
    }
}

/// Mate curvature from the formula
/// `ℓ̄ = θ̇ - τ̇ + ℓ`,
/// `β̄ = (β cos θ + λ(θ̇ + ℓ)) cos τ + (β sin θ + λ̇) sin τ`.
pub fn mate_curvature<T: Real>(
    cp: &CurvaturePair<T>,
    config: &MateConfig<T>,
    lam: &LambdaSolution<T>,
) -> Result<CurvaturePair<T>> {
    if lam.lambda.len() != cp.len() {
        return Err(Error::GridMismatch);
    }
    let mut ell = Vec::with_capacity(cp.len());
    let mut beta = Vec::with_capacity(cp.len());
    for (i, &t) in cp.grid.iter().enumerate() {
        let (th, ta) = (config.theta.eval(t), config.tau.eval(t));
        let dth = config.theta.deriv(t);
        let (l, b) = (cp.ell[i], cp.beta[i]);
        ell.push(dth - config.tau.deriv(t) + l);
        beta.push(
            (b * th.cos() + lam.lambda[i] * (dth + l)) * ta.cos()
                + (b * th.sin() + lam.lambda_d1[i]) * ta.sin(),
        );
    }
    CurvaturePair::from_samples(lam.interval, ell, beta)
}

/// Curvature read off a Legendre curve without the tangency gate.
fn direct_curvature<T: Real>(lc: &LegendreCurve<T>) -> (Vec<T>, Vec<T>) {
    lc.grid()
        .into_iter()
        .map(|t| {
            let mu = lc.mu(t);
            (lc.nu_d1(t).dot(mu), lc.gamma().d1(t).dot(mu))
        })
        .unzip()
}

pub(crate) fn assemble<T: Real>(
    source: LegendreCurve<T>,
    source_curvature: CurvaturePair<T>,
    config: MateConfig<T>,
    lam: LambdaSolution<T>,
) -> Result<MatePair<T>> {
    let grid = source.grid();
    if lam.lambda.len() != grid.len() || source_curvature.len() != grid.len() {
        return Err(Error::GridMismatch);
    }
    if !(lam.max_residual() <= lam.ode_tol) {
        return Err(Error::ResidualExceeded {
            max: lam.max_residual().to_f64_lossy(),
            tol: lam.ode_tol.to_f64_lossy(),
        });
    }
    let mut pos = Vec::with_capacity(grid.len());
    let mut nrm = Vec::with_capacity(grid.len());
    for (i, &t) in grid.iter().enumerate() {
        let (th, ta) = (config.theta.eval(t), config.tau.eval(t));
        let nu = source.nu(t);
        pos.push(source.position(t) + rotate_by(nu, th) * lam.lambda[i]);
        nrm.push(rotate_by(nu, th - ta));
    }
    let gamma = CurveModel::from_grid_samples(lam.interval, &pos)?;
    let nu = CurveModel::from_grid_samples(lam.interval, &nrm)?;
    let mate = LegendreCurve::new_unchecked(gamma, nu)?;
    let mate_curvature = mate_curvature(&source_curvature, &config, &lam)?;
    let diameter = source.diameter();
    Ok(MatePair {
        lambda_vanishes: lam.vanishes(diameter),
        mate_tol: mate_tol(diameter, source.is_analytic()),
        source,
        source_curvature,
        mate,
        config,
        lambda: lam,
        mate_curvature,
    })
}

/// Builds `γ̄ = γ + λv` with normal `ν̄ = cos(θ-τ) ν + sin(θ-τ) μ`.
///
/// The mate is sampled on the source grid; its derivatives come from
/// differences.
pub fn build_mate<T: Real>(
    lc: &LegendreCurve<T>,
    config: &MateConfig<T>,
    lam: &LambdaSolution<T>,
) -> Result<MatePair<T>> {
    let cp = legendre_curvature(lc)?;
    assemble(lc.clone(), cp, config.clone(), lam.clone())
}

/// Largest discrepancy between the mate curvature formula and the
/// curvature measured on the constructed mate, relative to
/// `max(max|ℓ̄|, 1/scale)` and `max(max|β̄|, max|β|)`.
pub fn verify_mate_curvature<T: Real>(mp: &MatePair<T>) -> Check<T> {
    let (ell, beta) = direct_curvature(&mp.mate);
    let f = &mp.mate_curvature;
    let ell_scale = f.max_abs_ell().max(f.ell_scale());
    let beta_scale = f.max_abs_beta().max(mp.source_curvature.max_abs_beta());
    let mut worst = T::zero();
    for i in 0..ell.len() {
        worst = worst
            .max((ell[i] - f.ell[i]).abs() / ell_scale)
            .max((beta[i] - f.beta[i]).abs() / beta_scale);
    }
    Check::new(worst, T::lit(CROSS_TOL))
}

/// The mate pair back from `(γ̄, ν̄)`: angles swapped and `λ` negated.
pub fn inverse_mate<T: Real>(mp: &MatePair<T>) -> Result<MatePair<T>> {
    let config = mp.config.swapped();
    let cp = mp.mate_curvature.clone();
    let mode = lambda::resolve_mode(&cp, &config).unwrap_or(SolveMode::Ode);
    let neg = |v: &[T]| v.iter().map(|&x| -x).collect::<Vec<T>>();
    let lam = from_values(
        &cp,
        &config,
        mp.lambda.interval,
        neg(&mp.lambda.lambda),
        neg(&mp.lambda.lambda_d1),
        mode,
    );
    assemble(mp.mate.clone(), cp, config, lam)
}

/// Position and normal errors of a round trip.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RoundTrip<T> {
    pub position: T,
    pub normal: T,
}

fn node_distance<T: Real>(a: &LegendreCurve<T>, b: &LegendreCurve<T>) -> Result<RoundTrip<T>> {
    let (ga, gb) = (a.grid(), b.grid());
    if ga.len() != gb.len() {
        return Err(Error::GridMismatch);
    }
    let mut rt = RoundTrip {
        position: T::zero(),
        normal: T::zero(),
    };
    for (&ta, &tb) in ga.iter().zip(&gb) {
        rt.position = rt.position.max((a.position(ta) - b.position(tb)).norm());
        rt.normal = rt.normal.max((a.nu(ta) - b.nu(tb)).norm());
    }
    Ok(rt)
}

/// Applies [`inverse_mate`] and measures how far the result is from the
/// original source on the grid.
pub fn round_trip_error<T: Real>(mp: &MatePair<T>) -> Result<RoundTrip<T>> {
    let back = inverse_mate(mp)?;
    node_distance(&back.mate, &mp.source)
}

/// Result of chaining two mate operations.
#[derive(Clone, Debug)]
pub enum Composition<T: Real> {
    /// `λ₁ + λ₂ ≡ 0`: the chain returns to the first curve; the errors are
    /// measured between the first and the last curve.
    Identity { error: RoundTrip<T> },
    /// The composite mate of the first curve with `λ = λ₁ + λ₂`.
    Mate(Box<MatePair<T>>),
}

/// Chains `γ₁ → γ₂` and `γ₂ → γ₃`.
///
/// Needs `γ₂` shared by both pairs and the second direction `v₂` equal to
/// the first `v₁`. When `max |λ₁ + λ₂| ≤ 1e-10 · diameter` the result is an
/// identity report, otherwise the composite mate with angles
/// `(θ₁, τ₁ - θ₂ + τ₂)`.
pub fn compose_mates<T: Real>(mp12: &MatePair<T>, mp23: &MatePair<T>) -> Result<Composition<T>> {
    let n = mp12.lambda.grid.len();
    if mp23.lambda.grid.len() != n {
        return Err(Error::GridMismatch);
    }
    let link = node_distance(&mp12.mate, &mp23.source)?;
    if link.position > mp12.mate_tol || link.normal > mp12.direction_tol() {
        return Err(Error::ChainViolation(format!(
            "second source differs from first mate (position {:e}, normal {:e})",
            link.position.to_f64_lossy(),
            link.normal.to_f64_lossy()
        )));
    }
    let dir = (0..n)
        .map(|i| (mp23.v_at(i) - mp12.v_at(i)).norm())
        .fold(T::zero(), T::max);
    if dir > mp12.direction_tol() {
        return Err(Error::ChainViolation(format!(
            "direction fields differ by {:e}",
            dir.to_f64_lossy()
        )));
    }
    let sum: Vec<T> = (0..n)
        .map(|i| mp12.lambda.lambda[i] + mp23.lambda.lambda[i])
        .collect();
    let diameter = mp12.source.diameter();
    if max_abs(&sum) <= T::lit(1e-10) * diameter {
        let error = node_distance(&mp23.mate, &mp12.source)?;
        return Ok(Composition::Identity { error });
    }
    let sum_d1: Vec<T> = (0..n)
        .map(|i| mp12.lambda.lambda_d1[i] + mp23.lambda.lambda_d1[i])
        .collect();
    let tau = mp12
        .config
        .tau
        .plus(&mp23.config.tau)
        .plus(&mp23.config.theta.negated());
    let config = MateConfig::new(mp12.config.theta.clone(), tau, sum[0], SolveMode::Auto);
    let cp = mp12.source_curvature.clone();
    let mode = lambda::resolve_mode(&cp, &config).unwrap_or(SolveMode::Ode);
    let interval = if mp12.lambda.interval.periodic && mp23.lambda.interval.periodic {
        mp12.lambda.interval
    } else if mp12.lambda.interval.periodic {
        mp23.lambda.interval
    } else {
        mp12.lambda.interval
    };
    let mut lam = from_values(&cp, &config, interval, sum, sum_d1, mode);
    // the second link was solved on the sampled first mate, so the chain
    // carries the error budget of both links
    lam.ode_tol = lam.ode_tol + mp12.lambda.ode_tol + mp23.lambda.ode_tol;
    let mp = assemble(mp12.source.clone(), cp, config, lam)?;
    Ok(Composition::Mate(Box::new(mp)))
}

/// Whether two Legendre curves are mates for given angles.
#[derive(Clone, Debug, PartialEq)]
pub struct MateRelation<T> {
    /// `λ = (γ̃ - γ) · v` on the grid.
    pub lambda: Vec<T>,
    /// `max |det(v, γ̃ - γ)|`: the offset must be parallel to `v`.
    pub offset_residual: T,
    /// `max |v - w̄|`.
    pub direction_residual: T,
    pub is_mate: bool,
}

/// Tests whether `(b, ν_b)` is a mate of `(a, ν_a)` for the angles
/// `(θ, τ)`: `γ_b - γ_a` must be parallel to `v` and `v = w̄`.
pub fn mate_relation<T: Real>(
    a: &LegendreCurve<T>,
    b: &LegendreCurve<T>,
    theta: &AngleFn<T>,
    tau: &AngleFn<T>,
) -> Result<MateRelation<T>> {
    let (ga, gb) = (a.grid(), b.grid());
    if ga.len() != gb.len() {
        return Err(Error::GridMismatch);
    }
    let mut lambda = Vec::with_capacity(ga.len());
    let (mut off, mut dir) = (T::zero(), T::zero());
    for (&ta, &tb) in ga.iter().zip(&gb) {
        let v = rotate_by(a.nu(ta), theta.eval(ta));
        let w = rotate_by(b.nu(tb), tau.eval(ta));
        let d = b.position(tb) - a.position(ta);
        lambda.push(d.dot(v));
        off = off.max(v.det(d).abs());
        dir = dir.max((v - w).norm());
    }
    let analytic = a.is_analytic();
    let is_mate = off <= mate_tol(a.diameter(), analytic) && dir <= mate_tol(T::one(), analytic);
    Ok(MateRelation {
        lambda,
        offset_residual: off,
        direction_residual: dir,
        is_mate,
    })
}
