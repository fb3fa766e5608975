use super::mate::MatePair;
use super::ODE_REL;
use crate::check::Check;
use crate::curve::{arclength_reparametrize, regular_curvature, CurveModel};
use crate::error::{Error, Result};
use crate::legendre::SING_REL;
use crate::plane::{rotate_by, AngleFn, SmoothFn, Vec2};
use crate::scalar::{max_abs, sign, Real};

/// Conditions for regular mates in arc length:
///
/// ```text
/// c1 = (cos θ + λ') sin τ - (sin θ - λ(θ' + κ)) cos τ
/// c2 = (cos θ + λ') cos τ + (sin θ - λ(θ' + κ)) sin τ
/// ```
fn regular_conditions<T: Real>(theta: T, dtheta: T, tau: T, lambda: T, dlambda: T, kappa: T) -> (T, T) {
    let a = theta.cos() + dlambda;
    let b = theta.sin() - lambda * (dtheta + kappa);
    (a * tau.sin() - b * tau.cos(), a * tau.cos() + b * tau.sin())
}

/// Regular-curve mate test on the arc-length grid.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularBertrandReport<T> {
    /// Arc-length grid.
    pub grid: Vec<T>,
    pub cond1_residual: Vec<T>,
    pub cond2_value: Vec<T>,
    pub is_mate: bool,
    /// `κ̄ = (θ' - τ' + κ) / |c2|`; empty unless `is_mate`.
    pub mate_curvature: Vec<T>,
    pub ode_tol: T,
    pub reg_tol: T,
}

impl<T: Real> RegularBertrandReport<T> {
    pub fn max_cond1(&self) -> T {
        max_abs(&self.cond1_residual)
    }

    pub fn min_abs_cond2(&self) -> T {
        self.cond2_value
            .iter()
            .fold(T::infinity(), |m, &c| m.min(c.abs()))
    }
}

/// Tests whether `γ̄ = γ + λ(cos θ t + sin θ n)` is a mate of the regular
/// curve `c`, with `θ`, `τ`, `λ` given as functions of arc length from the
/// start of `c`. The curve is reparametrized by arc length first.
pub fn check_regular_bertrand<T: Real>(
    c: &CurveModel<T>,
    theta: &AngleFn<T>,
    tau: &AngleFn<T>,
    lambda: &SmoothFn<T>,
) -> Result<RegularBertrandReport<T>> {
    let arc = arclength_reparametrize(c)?;
    let grid = arc.grid();
    let mut cond1 = Vec::with_capacity(grid.len());
    let mut cond2 = Vec::with_capacity(grid.len());
    let mut kappa = Vec::with_capacity(grid.len());
    let mut scale = T::one();
    for &s in &grid {
        let k = regular_curvature(&arc, s)?;
        let (th, dth) = (theta.eval(s), theta.deriv(s));
        let (l, dl) = (lambda.eval(s), lambda.deriv(s));
        let (c1, c2) = regular_conditions(th, dth, tau.eval(s), l, dl, k);
        scale = scale.max(dl.abs()).max((l * (dth + k)).abs());
        cond1.push(c1);
        cond2.push(c2);
        kappa.push(k);
    }
    let ode_tol = T::lit(ODE_REL) * scale;
    let reg_tol = arc.reg_tol();
    let mut report = RegularBertrandReport {
        grid,
        cond1_residual: cond1,
        cond2_value: cond2,
        is_mate: false,
        mate_curvature: Vec::new(),
        ode_tol,
        reg_tol,
    };
    report.is_mate = report.max_cond1() <= ode_tol && report.min_abs_cond2() > reg_tol;
    if report.is_mate {
        report.mate_curvature = report
            .grid
            .iter()
            .zip(&kappa)
            .zip(&report.cond2_value)
            .map(|((&s, &k), &c2)| (theta.deriv(s) - tau.deriv(s) + k) / c2.abs())
            .collect();
    }
    Ok(report)
}

/// One grid point of a Legendre mate read as a mate of regular curves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegularMatePoint<T> {
    pub t: T,
    /// Angle of `v` from the unit tangent of `γ`.
    pub theta_reg: T,
    /// Angle of `w̄` from the unit tangent of `γ̄`.
    pub tau_reg: T,
    pub lambda: T,
    /// `sign(β)`.
    pub sign: T,
    /// `sign(β̄)`.
    pub sign_bar: T,
    /// First regular condition in arc length (should vanish).
    pub cond1: T,
    /// Second regular condition; equals `β̄/β` here.
    pub cond2: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularMateData<T> {
    pub points: Vec<RegularMatePoint<T>>,
    /// `max |c1|` against `ode_tol / min|β|`.
    pub cond1_check: Check<T>,
    /// `v` and `w̄` rebuilt from the regular frames against the Legendre `v`.
    pub frame_check: Check<T>,
}

/// Reads a Legendre mate pair on `[t_a, t_b]` as a mate of regular curves.
///
/// With `t = sign(β) μ` and `n = J(t)`, the direction `v` has angle
/// `θ - π/2` from `t` when `β > 0` and `θ + π/2` when `β < 0`; the same
/// holds for `τ` on the mate with `sign(β̄)`.
pub fn regular_to_legendre_mates<T: Real>(
    mp: &MatePair<T>,
    t_a: T,
    t_b: T,
) -> Result<RegularMateData<T>> {
    let cp = &mp.source_curvature;
    let cpb = &mp.mate_curvature;
    let zero = T::lit(SING_REL) * cp.max_abs_beta();
    let zero_bar = T::lit(SING_REL) * cpb.max_abs_beta().max(cp.max_abs_beta());
    let q = T::frac_pi_2();
    let grid = mp.source.grid();
    let grid_bar = mp.mate.grid();
    let mut points: Vec<RegularMatePoint<T>> = Vec::new();
    let mut frame_err = T::zero();
    let mut min_speed = T::infinity();
    for (i, &t) in grid.iter().enumerate() {
        if t < t_a || t > t_b {
            continue;
        }
        let (b, bb) = (cp.beta[i], cpb.beta[i]);
        if b.abs() <= zero || bb.abs() <= zero_bar {
            return Err(Error::SingularInSubinterval { t: t.to_f64_lossy() });
        }
        let (s, sb) = (sign(b), sign(bb));
        if let Some(p) = points.last() {
            if p.sign != s || p.sign_bar != sb {
                return Err(Error::SingularInSubinterval { t: t.to_f64_lossy() });
            }
        }
        let (th, ta) = (mp.config.theta.eval(t), mp.config.tau.eval(t));
        let shift = |sg: T| if sg > T::zero() { -q } else { q };
        let (theta_reg, tau_reg) = (th + shift(s), ta + shift(sb));

        let tangent = mp.source.mu(t) * s;
        let tangent_bar = mp.mate.mu(grid_bar[i]) * sb;
        let frame = |tan: Vec2<T>, a: T| rotate_by(tan.rotate_j() * -T::one(), a + q);
        let v = rotate_by(mp.source.nu(t), th);
        let v_reg = frame(tangent, theta_reg);
        let w_reg = frame(tangent_bar, tau_reg);
        frame_err = frame_err.max((v_reg - v).norm()).max((w_reg - v).norm());

        let speed = b.abs();
        min_speed = min_speed.min(speed);
        let kappa = cp.ell[i] / speed;
        let (cond1, cond2) = regular_conditions(
            theta_reg,
            mp.config.theta.deriv(t) / speed,
            tau_reg,
            mp.lambda.lambda[i],
            mp.lambda.lambda_d1[i] / speed,
            kappa,
        );
        points.push(RegularMatePoint {
            t,
            theta_reg,
            tau_reg,
            lambda: mp.lambda.lambda[i],
            sign: s,
            sign_bar: sb,
            cond1,
            cond2,
        });
    }
    if points.is_empty() {
        return Err(Error::EmptyRegularSubgrid);
    }
    let c1 = points.iter().fold(T::zero(), |m, p| m.max(p.cond1.abs()));
    Ok(RegularMateData {
        cond1_check: Check::new(c1, mp.lambda.ode_tol / min_speed),
        frame_check: Check::new(frame_err, mp.direction_tol()),
        points,
    })
}
