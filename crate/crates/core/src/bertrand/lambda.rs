use super::{MateConfig, SolveMode, ANGLE_TOL, ODE_REL};
use crate::curve::ParamInterval;
use crate::diff;
use crate::error::{Error, Result};
use crate::legendre::{CurvaturePair, CuspThresholds};
use crate::plane::AngleFn;
use crate::scalar::{max_abs, Real};

/// The distance function `λ` of a mate on the source grid.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaSolution<T> {
    /// Interval of the mate: periodic only when the source is and the mate
    /// closes up.
    pub interval: ParamInterval<T>,
    pub grid: Vec<T>,
    pub lambda: Vec<T>,
    /// `λ̇` from the distance equation (differences in algebraic mode).
    pub lambda_d1: Vec<T>,
    /// `|(β sin θ + λ̇) cos τ - (β cos θ + λ(θ̇ + ℓ)) sin τ|`, with `λ̇` taken
    /// from differences of the `λ` samples.
    pub residual: Vec<T>,
    pub ode_tol: T,
    /// `Ode` or `Algebraic`, never `Auto`.
    pub mode: SolveMode,
    /// Set when a nonzero `lambda0` was given to the algebraic solve.
    pub lambda0_ignored: bool,
    /// Set when the first integration missed the tolerance and was redone
    /// with half steps.
    pub refined: bool,
}

impl<T: Real> LambdaSolution<T> {
    pub fn max_residual(&self) -> T {
        max_abs(&self.residual)
    }

    pub fn max_abs_lambda(&self) -> T {
        max_abs(&self.lambda)
    }

    /// `λ ≢ 0` advisory: true when `max |λ| ≤ 1e-10 · diameter`.
    pub fn vanishes(&self, diameter: T) -> bool {
        self.max_abs_lambda() <= T::lit(super::LAMBDA_VANISH_REL) * diameter
    }
}

/// Mode actually used for `config` on the grid of `cp`.
pub(crate) fn resolve_mode<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>) -> Result<SolveMode> {
    let tol = T::lit(ANGLE_TOL);
    let cos: Vec<T> = cp.grid.iter().map(|&t| config.tau.eval(t).cos()).collect();
    let zero = cos.iter().filter(|c| c.abs() <= tol).count();
    let positive = cos.iter().filter(|&&c| c > tol).count();
    let negative = cos.iter().filter(|&&c| c < -tol).count();
    let all_zero = zero == cos.len();
    let nonzero_one_sign = zero == 0 && (positive == 0 || negative == 0);
    match config.mode {
        SolveMode::Algebraic if all_zero => Ok(SolveMode::Algebraic),
        SolveMode::Algebraic => Err(Error::AlgebraicNeedsCosTauZero),
        SolveMode::Ode if nonzero_one_sign => Ok(SolveMode::Ode),
        SolveMode::Ode if all_zero => Err(Error::OdeNeedsCosTauNonzero),
        SolveMode::Auto if all_zero => Ok(SolveMode::Algebraic),
        SolveMode::Auto if nonzero_one_sign => Ok(SolveMode::Ode),
        _ => Err(Error::MixedCosTau),
    }
}

/// Scale of the terms of the distance equation.
fn equation_scale<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>, lam: &[T], dlam: &[T]) -> T {
    let mut s = T::one().max(cp.max_abs_beta()).max(max_abs(dlam));
    for (i, &t) in cp.grid.iter().enumerate() {
        s = s.max((lam[i] * (config.theta.deriv(t) + cp.ell[i])).abs());
    }
    s
}

fn residuals<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>, lam: &[T], dlam: &[T]) -> Vec<T> {
    cp.grid
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let (th, ta) = (config.theta.eval(t), config.tau.eval(t));
            let (b, l) = (cp.beta[i], cp.ell[i]);
            ((b * th.sin() + dlam[i]) * ta.cos()
                - (b * th.cos() + lam[i] * (config.theta.deriv(t) + l)) * ta.sin())
            .abs()
        })
        .collect()
}

/// Whether `f(t_end) ≡ f(t_start)` modulo `2π`.
fn angle_closes<T: Real>(f: &AngleFn<T>, iv: &ParamInterval<T>) -> bool {
    let two_pi = T::pi() + T::pi();
    let d = (f.eval(iv.t_end) - f.eval(iv.t_start)) / two_pi;
    (d - d.round()).abs() <= T::lit(1e-9)
}

/// Interval of the mate given the value of `λ` one period after `t_start`.
fn mate_interval<T: Real>(
    cp: &CurvaturePair<T>,
    config: &MateConfig<T>,
    lambda: &[T],
    lambda_end: Option<T>,
) -> ParamInterval<T> {
    let iv = cp.interval;
    if iv.periodic {
        if let Some(end) = lambda_end {
            let scale = max_abs(lambda).max(cp.max_abs_beta() * cp.parameter_scale());
            if (end - lambda[0]).abs() <= T::lit(1e-6) * scale
                && angle_closes(&config.theta, &iv)
                && angle_closes(&config.tau, &iv)
            {
                return iv;
            }
        }
        let n = iv.n_samples;
        let last = iv.t_start + iv.step() * T::from_count(n - 1);
        return ParamInterval {
            t_start: iv.t_start,
            t_end: last,
            n_samples: n,
            periodic: false,
        };
    }
    iv
}

fn rk4<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>, lambda0: T, substeps: usize) -> (Vec<T>, T) {
    let rhs = |t: T, lam: T| {
        let (th, ta) = (config.theta.eval(t), config.tau.eval(t));
        let b = cp.beta_at(t);
        ta.tan() * (b * th.cos() + lam * (config.theta.deriv(t) + cp.ell_at(t))) - b * th.sin()
    };
    let n = cp.len();
    let h = cp.interval.step() / T::from_count(substeps);
    let half = T::lit(0.5);
    let sixth = T::lit(1.0 / 6.0);
    let two = T::lit(2.0);
    let step = |t: T, y: T| {
        let k1 = rhs(t, y);
        let k2 = rhs(t + h * half, y + h * half * k1);
        let k3 = rhs(t + h * half, y + h * half * k2);
        let k4 = rhs(t + h, y + h * k3);
        y + h * sixth * (k1 + two * k2 + two * k3 + k4)
    };
    let mut out = Vec::with_capacity(n);
    let mut y = lambda0;
    out.push(y);
    let cell = |i: usize, mut y: T| {
        for k in 0..substeps {
            y = step(cp.grid[i] + h * T::from_count(k), y);
        }
        y
    };
    for i in 0..n - 1 {
        y = cell(i, y);
        out.push(y);
    }
    let end = cell(n - 1, y);
    (out, end)
}

/// Solves the distance equation for `λ` on the grid of `cp`.
///
/// In ODE mode classical RK4 runs on the grid step from `λ(t_start) =
/// lambda0`; if the residual misses `ode_tol` the solve is repeated once with
/// two steps per cell. In algebraic mode `λ = -β cos θ / (θ̇ + ℓ)`.
pub fn solve_lambda<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>) -> Result<LambdaSolution<T>> {
    let mode = resolve_mode(cp, config)?;
    match mode {
        SolveMode::Algebraic => solve_algebraic(cp, config),
        _ => solve_ode(cp, config),
    }
}

fn solve_ode<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>) -> Result<LambdaSolution<T>> {
    let mut last = None;
    for substeps in [1, 2] {
        let (lambda, end) = rk4(cp, config, config.lambda0, substeps);
        let lambda_d1: Vec<T> = cp
            .grid
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let (th, ta) = (config.theta.eval(t), config.tau.eval(t));
                let b = cp.beta[i];
                ta.tan() * (b * th.cos() + lambda[i] * (config.theta.deriv(t) + cp.ell[i]))
                    - b * th.sin()
            })
            .collect();
        let interval = mate_interval(cp, config, &lambda, Some(end));
        let fd = diff::derivative(&lambda, interval.step(), 1, interval.periodic);
        let residual = residuals(cp, config, &lambda, &fd);
        let ode_tol = T::lit(ODE_REL) * equation_scale(cp, config, &lambda, &lambda_d1);
        let sol = LambdaSolution {
            interval,
            grid: cp.grid.clone(),
            lambda,
            lambda_d1,
            residual,
            ode_tol,
            mode: SolveMode::Ode,
            lambda0_ignored: false,
            refined: substeps > 1,
        };
        if sol.max_residual() <= ode_tol {
            return Ok(sol);
        }
        last = Some(sol);
    }
    let sol = last.expect("two attempts made");
    Err(Error::ResidualExceeded {
        max: sol.max_residual().to_f64_lossy(),
        tol: sol.ode_tol.to_f64_lossy(),
    })
}

fn solve_algebraic<T: Real>(cp: &CurvaturePair<T>, config: &MateConfig<T>) -> Result<LambdaSolution<T>> {
    let nz = CuspThresholds::for_pair(cp).ell.nonzero;
    let denom: Vec<T> = cp
        .grid
        .iter()
        .zip(&cp.ell)
        .map(|(&t, &l)| config.theta.deriv(t) + l)
        .collect();
    let bad: Vec<usize> = (0..denom.len()).filter(|&i| denom[i].abs() <= nz).collect();
    if !bad.is_empty() {
        // first grid point of each run of small denominators
        let inflections = bad
            .iter()
            .enumerate()
            .filter(|&(k, &i)| k == 0 || bad[k - 1] + 1 != i)
            .map(|(_, &i)| cp.grid[i].to_f64_lossy())
            .collect();
        return Err(Error::DivisionBlowUp { inflections });
    }
    let value = |t: T, b: T, d: T| -b * config.theta.eval(t).cos() / d;
    let lambda: Vec<T> = (0..cp.len())
        .map(|i| value(cp.grid[i], cp.beta[i], denom[i]))
        .collect();
    let iv = cp.interval;
    let end = iv
        .periodic
        .then(|| value(iv.t_end, cp.beta_at(iv.t_end), config.theta.deriv(iv.t_end) + cp.ell_at(iv.t_end)));
    let interval = mate_interval(cp, config, &lambda, end);
    let lambda_d1 = diff::derivative(&lambda, interval.step(), 1, interval.periodic);
    let residual = residuals(cp, config, &lambda, &lambda_d1);
    let ode_tol = T::lit(ODE_REL) * equation_scale(cp, config, &lambda, &lambda_d1);
    let sol = LambdaSolution {
        interval,
        grid: cp.grid.clone(),
        lambda,
        lambda_d1,
        residual,
        ode_tol,
        mode: SolveMode::Algebraic,
        lambda0_ignored: config.lambda0 != T::zero(),
        refined: false,
    };
    if sol.max_residual() > ode_tol {
        return Err(Error::ResidualExceeded {
            max: sol.max_residual().to_f64_lossy(),
            tol: ode_tol.to_f64_lossy(),
        });
    }
    Ok(sol)
}

/// `λ` given directly on the grid, with residuals against `cp`.
pub(crate) fn from_values<T: Real>(
    cp: &CurvaturePair<T>,
    config: &MateConfig<T>,
    interval: ParamInterval<T>,
    lambda: Vec<T>,
    lambda_d1: Vec<T>,
    mode: SolveMode,
) -> LambdaSolution<T> {
    let fd = diff::derivative(&lambda, interval.step(), 1, interval.periodic);
    let residual = residuals(cp, config, &lambda, &fd);
    let ode_tol = T::lit(ODE_REL) * equation_scale(cp, config, &lambda, &lambda_d1);
    LambdaSolution {
        interval,
        grid: cp.grid.clone(),
        lambda,
        lambda_d1,
        residual,
        ode_tol,
        mode,
        lambda0_ignored: false,
        refined: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::BuiltinSpec;
    use crate::legendre::{builtin_legendre, legendre_curvature};
    use std::collections::BTreeMap;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn pair(name: &str, r: Option<f64>, n: usize) -> CurvaturePair<f64> {
        let mut p = BTreeMap::new();
        if let Some(r) = r {
            p.insert("r".to_string(), r);
        }
        let lc = builtin_legendre(&BuiltinSpec::from_params(name, &p, n).unwrap()).unwrap();
        legendre_curvature(&lc).unwrap()
    }

    fn max_err(sol: &LambdaSolution<f64>, f: impl Fn(f64) -> f64) -> f64 {
        sol.grid
            .iter()
            .zip(&sol.lambda)
            .map(|(&t, &l)| (l - f(t)).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn circle_evolute_is_algebraic() {
        let cp = pair("circle", Some(2.0), 256);
        let sol = solve_lambda(&cp, &MateConfig::constant(0.0, FRAC_PI_2, 5.0)).unwrap();
        assert_eq!(sol.mode, SolveMode::Algebraic);
        assert!(sol.lambda0_ignored);
        assert!(max_err(&sol, |_| -2.0) < 1e-14);
        assert!(sol.interval.periodic);
    }

    #[test]
    fn circle_involute_is_linear() {
        let cp = pair("circle", Some(2.0), 256);
        let sol = solve_lambda(&cp, &MateConfig::constant(FRAC_PI_2, 0.0, 0.5)).unwrap();
        assert_eq!(sol.mode, SolveMode::Ode);
        assert!(max_err(&sol, |t| -2.0 * t + 0.5) < 1e-12);
        assert!(!sol.interval.periodic);
    }

    #[test]
    fn circle_involutoid_exponential() {
        let (r, tau, c) = (1.5, FRAC_PI_3, 0.2);
        let cp = pair("circle", Some(r), 1024);
        let cfg = MateConfig::constant(FRAC_PI_2, tau, r / tau.tan() + c);
        let sol = solve_lambda(&cp, &cfg).unwrap();
        let exact = |t: f64| r / tau.tan() + c * (tau.tan() * t).exp();
        let rel = max_err(&sol, exact) / sol.max_abs_lambda();
        assert!(rel < 5e-9, "{rel:e}");
    }

    #[test]
    fn astroid_involute() {
        let cp = pair("astroid", None, 1024);
        let c = 0.3;
        let sol = solve_lambda(&cp, &MateConfig::constant(FRAC_PI_2, 0.0, 0.75 + c)).unwrap();
        assert!(max_err(&sol, |t| 0.75 * (2.0 * t).cos() + c) < 1e-9);
        assert!(sol.interval.periodic);
    }

    #[test]
    fn mode_resolution_errors() {
        let cp = pair("circle", Some(1.0), 64);
        let mut cfg = MateConfig::constant(FRAC_PI_2, FRAC_PI_3, 0.0);
        cfg.mode = SolveMode::Algebraic;
        assert_eq!(solve_lambda(&cp, &cfg), Err(Error::AlgebraicNeedsCosTauZero));
        let mut cfg = MateConfig::constant(0.0, FRAC_PI_2, 0.0);
        cfg.mode = SolveMode::Ode;
        assert_eq!(solve_lambda(&cp, &cfg), Err(Error::OdeNeedsCosTauNonzero));
        let cfg = MateConfig::new(
            AngleFn::constant(0.0),
            AngleFn::new(|t: f64| t, |_| 1.0),
            0.0,
            SolveMode::Auto,
        );
        assert_eq!(solve_lambda(&cp, &cfg), Err(Error::MixedCosTau));
    }

    #[test]
    fn evolute_of_line_blows_up() {
        let cp = pair("line", None, 64);
        let err = solve_lambda(&cp, &MateConfig::constant(0.0, FRAC_PI_2, 0.0)).unwrap_err();
        match err {
            Error::DivisionBlowUp { inflections } => assert_eq!(inflections, vec![-1.0]),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn rk4_converges_fourth_order() {
        // involutoid of a circle: λ̇ = λ tan τ - r, nontrivial exponential
        let err = |n: usize| {
            let cp = pair("circle", Some(1.0), n);
            let tau = FRAC_PI_4;
            let sol = solve_lambda(&cp, &MateConfig::constant(FRAC_PI_2, tau, 1.1)).unwrap();
            max_err(&sol, |t| 1.0 + 0.1 * t.exp())
        };
        let (e1, e2) = (err(256), err(512));
        assert!(e1 / e2 >= 12.0, "{e1:e} {e2:e}");
    }
}
