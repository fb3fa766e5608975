//! Legendre curves `(γ, ν)`, their curvature pair `(ℓ, β)`, singular and
//! inflection points, and conversion to and from regular curves.
//!
//! With `μ = J(ν)` the moving frame satisfies `ν̇ = ℓμ`, `μ̇ = -ℓν` and
//! `γ̇ = βμ`; `γ` is singular exactly where `β` vanishes.

use std::cmp::Ordering;
use std::fmt;

use crate::check::Check;
use crate::curve::{
    build_builtin, Builtin, BuiltinSpec, CurveKind, CurveModel, ParamInterval,
};
use crate::diff::{self, UniformGrid};
use crate::error::{Error, Result};
use crate::plane::{five_point, UnitVec2, Vec2, UNIT_TOL};
use crate::scalar::{max_abs, sign, Real};

/// Tangency tolerance relative to `max |γ̇|` when both fields are closed-form.
pub const LEG_TOL_ANALYTIC: f64 = 1e-8;
/// Tangency tolerance relative to `max |γ̇|` when either field is sampled.
pub const LEG_TOL_SAMPLED: f64 = 1e-4;
/// Relative tolerance for agreement between independent computations.
pub const CROSS_TOL: f64 = 1e-6;
/// "Equals zero" threshold relative to the natural scale of each quantity.
pub const SING_REL: f64 = 1e-7;
/// Ratio between the "nonzero" and the "zero" thresholds.
pub const NZ_FACTOR: f64 = 1e2;

/// A plane curve `γ` with a unit normal field `ν`, `γ̇ · ν = 0`.
///
/// `ν` is stored as a curve in the plane so that it carries its own
/// derivatives.
#[derive(Clone)]
pub struct LegendreCurve<T> {
    gamma: CurveModel<T>,
    nu: CurveModel<T>,
    leg_tol: T,
}

impl<T: Real> fmt::Debug for LegendreCurve<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LegendreCurve")
            .field("gamma", &self.gamma)
            .field("nu", &self.nu)
            .field("leg_tol", &self.leg_tol)
            .finish()
    }
}

impl<T: Real> LegendreCurve<T> {
    /// Validates unit length of `ν` and the tangency condition on the grid.
    pub fn new(gamma: CurveModel<T>, nu: CurveModel<T>) -> Result<Self> {
        let lc = Self::new_unchecked(gamma, nu)?;
        for t in lc.grid() {
            let n = lc.nu.position(t).norm();
            if (n - T::one()).abs() > T::lit(UNIT_TOL) {
                return Err(Error::NotUnit {
                    norm: n.to_f64_lossy(),
                });
            }
        }
        let c = lc.tangency_check();
        if !c.pass {
            return Err(Error::TangencyViolation {
                max: c.max_residual.to_f64_lossy(),
                tol: c.tolerance.to_f64_lossy(),
            });
        }
        Ok(lc)
    }

    pub(crate) fn new_unchecked(gamma: CurveModel<T>, nu: CurveModel<T>) -> Result<Self> {
        if gamma.interval() != nu.interval() {
            return Err(Error::GridMismatch);
        }
        let analytic = gamma.kind() == CurveKind::Analytic && nu.kind() == CurveKind::Analytic;
        let rel = if analytic {
            LEG_TOL_ANALYTIC
        } else {
            LEG_TOL_SAMPLED
        };
        let floor = T::epsilon().sqrt();
        let leg_tol = T::lit(rel) * gamma.max_speed().max(floor);
        Ok(LegendreCurve { gamma, nu, leg_tol })
    }

    /// Legendre curve from positions and normals on the grid of `interval`.
    /// Normals within the unit tolerance are renormalized; others are rejected.
    pub fn from_samples(
        interval: ParamInterval<T>,
        positions: &[Vec2<T>],
        normals: &[Vec2<T>],
    ) -> Result<Self> {
        let normals: Vec<Vec2<T>> = normals
            .iter()
            .map(|&n| UnitVec2::try_from_vec(n).map(UnitVec2::get))
            .collect::<Result<_>>()?;
        let gamma = CurveModel::from_grid_samples(interval, positions)?;
        let nu = CurveModel::from_grid_samples(interval, &normals)?;
        Self::new(gamma, nu)
    }

    pub fn gamma(&self) -> &CurveModel<T> {
        &self.gamma
    }

    /// The normal field as a plane curve, with its derivatives.
    pub fn normal_model(&self) -> &CurveModel<T> {
        &self.nu
    }

    pub fn interval(&self) -> &ParamInterval<T> {
        self.gamma.interval()
    }

    pub fn grid(&self) -> Vec<T> {
        self.gamma.grid()
    }

    /// `true` when both `γ` and `ν` are closed-form.
    pub fn is_analytic(&self) -> bool {
        self.gamma.kind() == CurveKind::Analytic && self.nu.kind() == CurveKind::Analytic
    }

    pub fn position(&self, t: T) -> Vec2<T> {
        self.gamma.position(t)
    }

    /// `ν(t)`; sampled normals are renormalized between grid points.
    pub fn nu(&self, t: T) -> Vec2<T> {
        let n = self.nu.position(t);
        match self.nu.kind() {
            CurveKind::Analytic => n,
            CurveKind::Sampled => n / n.norm(),
        }
    }

    /// `μ(t) = J(ν(t))`.
    pub fn mu(&self, t: T) -> Vec2<T> {
        self.nu(t).rotate_j()
    }

    pub fn nu_d1(&self, t: T) -> Vec2<T> {
        self.nu.d1(t)
    }

    pub fn nu_d2(&self, t: T) -> Vec2<T> {
        self.nu.d2(t)
    }

    /// Tangency tolerance: `1e-8 · max |γ̇|` (closed form) or `1e-4 · max |γ̇|`
    /// (sampled), with `√ε` as the floor for `max |γ̇|`.
    pub fn leg_tol(&self) -> T {
        self.leg_tol
    }

    /// Diagonal of the bounding box of `γ` on the grid.
    pub fn diameter(&self) -> T {
        self.gamma.diameter()
    }

    /// `max |γ̇ · ν|` on the grid against `leg_tol`.
    pub fn tangency_check(&self) -> Check<T> {
        let worst = self
            .grid()
            .into_iter()
            .map(|t| self.gamma.d1(t).dot(self.nu(t)).abs())
            .fold(T::zero(), T::max);
        Check::new(worst, self.leg_tol)
    }

    /// `(γ, -ν)`, whose curvature is `(ℓ, -β)`.
    pub fn negated_normal(&self) -> Self {
        LegendreCurve {
            gamma: self.gamma.clone(),
            nu: self.nu.negated(),
            leg_tol: self.leg_tol,
        }
    }
}

/// Samples of the curvature `(ℓ, β)` and their derivatives on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvaturePair<T> {
    pub interval: ParamInterval<T>,
    pub grid: Vec<T>,
    pub ell: Vec<T>,
    pub beta: Vec<T>,
    pub ell_d1: Vec<T>,
    pub ell_d2: Vec<T>,
    pub beta_d1: Vec<T>,
    pub beta_d2: Vec<T>,
    ell_d3: Vec<T>,
    beta_d3: Vec<T>,
}

/// `(β, β̇, β̈, ℓ, ℓ̇, ℓ̈)` at one parameter value.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet<T> {
    pub beta: T,
    pub beta_d1: T,
    pub beta_d2: T,
    pub ell: T,
    pub ell_d1: T,
    pub ell_d2: T,
}

impl<T: Real> CurvaturePair<T> {
    /// Pair from samples of `ℓ` and `β` on the grid of `interval`; the
    /// derivatives come from fourth-order differences.
    pub fn from_samples(interval: ParamInterval<T>, ell: Vec<T>, beta: Vec<T>) -> Result<Self> {
        if ell.len() != interval.n_samples || beta.len() != interval.n_samples {
            return Err(Error::GridMismatch);
        }
        if let Some(v) = ell.iter().chain(&beta).find(|v| !v.is_finite()) {
            return Err(Error::NonFinite(v.to_string()));
        }
        let g = interval.uniform_grid();
        let d = |v: &[T], k| diff::derivative(v, g.h, k, g.periodic);
        Ok(CurvaturePair {
            interval,
            grid: g.nodes(),
            ell_d1: d(&ell, 1),
            ell_d2: d(&ell, 2),
            ell_d3: d(&ell, 3),
            beta_d1: d(&beta, 1),
            beta_d2: d(&beta, 2),
            beta_d3: d(&beta, 3),
            ell,
            beta,
        })
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    fn uniform(&self) -> UniformGrid<T> {
        self.interval.uniform_grid()
    }

    pub fn ell_at(&self, t: T) -> T {
        self.uniform().hermite(&self.ell, &self.ell_d1, t)
    }

    pub fn beta_at(&self, t: T) -> T {
        self.uniform().hermite(&self.beta, &self.beta_d1, t)
    }

    pub fn beta_d1_at(&self, t: T) -> T {
        self.uniform().hermite(&self.beta_d1, &self.beta_d2, t)
    }

    /// All interpolated values and derivatives at `t`.
    pub fn jet(&self, t: T) -> Jet<T> {
        let g = self.uniform();
        Jet {
            beta: g.hermite(&self.beta, &self.beta_d1, t),
            beta_d1: g.hermite(&self.beta_d1, &self.beta_d2, t),
            beta_d2: g.hermite(&self.beta_d2, &self.beta_d3, t),
            ell: g.hermite(&self.ell, &self.ell_d1, t),
            ell_d1: g.hermite(&self.ell_d1, &self.ell_d2, t),
            ell_d2: g.hermite(&self.ell_d2, &self.ell_d3, t),
        }
    }

    pub fn max_abs_beta(&self) -> T {
        max_abs(&self.beta)
    }

    pub fn max_abs_ell(&self) -> T {
        max_abs(&self.ell)
    }

    /// Interval length divided by `2π`: the parameter span of one radian for
    /// a closed curve traversed once.
    pub fn parameter_scale(&self) -> T {
        self.interval.length() / (T::pi() + T::pi())
    }

    /// Natural size of `ℓ`: one turn over the interval.
    pub fn ell_scale(&self) -> T {
        T::one() / self.parameter_scale()
    }
}

/// Curvature pair of a Legendre curve on its grid.
pub fn legendre_curvature<T: Real>(lc: &LegendreCurve<T>) -> Result<CurvaturePair<T>> {
    let tc = lc.tangency_check();
    if !tc.pass {
        return Err(Error::TangencyViolation {
            max: tc.max_residual.to_f64_lossy(),
            tol: tc.tolerance.to_f64_lossy(),
        });
    }
    let grid = lc.grid();
    let mut ell = Vec::with_capacity(grid.len());
    let mut beta = Vec::with_capacity(grid.len());
    for &t in &grid {
        let mu = lc.mu(t);
        ell.push(lc.nu_d1(t).dot(mu));
        beta.push(lc.gamma().d1(t).dot(mu));
    }
    CurvaturePair::from_samples(*lc.interval(), ell, beta)
}

/// `max |γ̇ - βμ|` on the grid against `leg_tol`.
pub fn reconstruction_check<T: Real>(lc: &LegendreCurve<T>, cp: &CurvaturePair<T>) -> Check<T> {
    let worst = cp
        .grid
        .iter()
        .zip(&cp.beta)
        .map(|(&t, &b)| (lc.gamma().d1(t) - lc.mu(t) * b).norm())
        .fold(T::zero(), T::max);
    Check::new(worst, lc.leg_tol())
}

/// Frenet closure `|ν̇ - ℓμ|`, `|μ̇ + ℓν|` relative to `max(max|ℓ|, 1/scale)`.
pub fn frenet_check<T: Real>(lc: &LegendreCurve<T>, cp: &CurvaturePair<T>) -> Check<T> {
    let scale = cp.max_abs_ell().max(cp.ell_scale());
    let mut worst = T::zero();
    for (&t, &l) in cp.grid.iter().zip(&cp.ell) {
        let (nu, mu, dnu) = (lc.nu(t), lc.mu(t), lc.nu_d1(t));
        let dmu = dnu.rotate_j();
        worst = worst
            .max((dnu - mu * l).norm())
            .max((dmu + nu * l).norm());
    }
    Check::new(worst / scale, T::lit(CROSS_TOL))
}

/// Legendre lift `(γ, J(γ̇/|γ̇|))` of a regular curve; its curvature is
/// `(|γ̇|κ, -|γ̇|)`.
pub fn from_regular<T: Real>(c: &CurveModel<T>) -> Result<LegendreCurve<T>> {
    c.require_regular()?;
    let (c1, c2, c3) = (c.clone(), c.clone(), c.clone());
    let nu = move |t: T| {
        let g1 = c1.d1(t);
        g1.rotate_j() / g1.norm()
    };
    // ν̇ = -(sκ)T with s = |γ̇|, sκ = det(γ̇, γ̈)/s²
    let nu_d1 = move |t: T| {
        let (g1, g2) = (c2.d1(t), c2.d2(t));
        let s2 = g1.norm_sq();
        g1 * (-g1.det(g2) / (s2 * s2.sqrt()))
    };
    // ν̈ = -(sκ)' T - (sκ)² ν
    let nu_d2 = move |t: T| {
        let (g1, g2, g3) = (c3.d1(t), c3.d2(t), c3.d3(t));
        let s2 = g1.norm_sq();
        let s = s2.sqrt();
        let sk = g1.det(g2) / s2;
        let dsk = g1.det(g3) / s2 - (g1.det(g2) * g1.dot(g2) * T::lit(2.0)) / (s2 * s2);
        let tangent = g1 / s;
        tangent * (-dsk) - tangent.rotate_j() * (sk * sk)
    };
    let h = c.interval().step() * T::lit(1e-2);
    let nu_d2_arc = std::sync::Arc::new(nu_d2);
    let nu_d2_fd = nu_d2_arc.clone();
    let nu_d3 = move |t: T| five_point(|u| nu_d2_fd(u), t, h);
    let nu_model = CurveModel::analytic(*c.interval(), nu, nu_d1, move |t| nu_d2_arc(t), nu_d3);
    let lc = LegendreCurve::new_unchecked(c.clone(), nu_model)?;
    let lc = if c.kind() == CurveKind::Analytic {
        lc
    } else {
        LegendreCurve {
            leg_tol: T::lit(LEG_TOL_SAMPLED) * c.max_speed().max(T::epsilon().sqrt()),
            ..lc
        }
    };
    Ok(lc)
}

/// Closed-form Legendre curve of a built-in: the circle carries
/// `ν = (cos t, sin t)`, the astroid `ν = (sin t, cos t)`; the line and the
/// ellipse use the lift of [`from_regular`].
pub fn builtin_legendre<T: Real>(spec: &BuiltinSpec<T>) -> Result<LegendreCurve<T>> {
    let gamma = build_builtin(spec)?;
    let v = |x: T, y: T| Vec2 { x, y };
    let nu = match spec.shape {
        Builtin::Circle { .. } => CurveModel::analytic(
            spec.interval,
            move |t: T| v(t.cos(), t.sin()),
            move |t: T| v(-t.sin(), t.cos()),
            move |t: T| v(-t.cos(), -t.sin()),
            move |t: T| v(t.sin(), -t.cos()),
        ),
        Builtin::Astroid { .. } => CurveModel::analytic(
            spec.interval,
            move |t: T| v(t.sin(), t.cos()),
            move |t: T| v(t.cos(), -t.sin()),
            move |t: T| v(-t.sin(), -t.cos()),
            move |t: T| v(-t.cos(), t.sin()),
        ),
        Builtin::Line { .. } | Builtin::Ellipse { .. } => return from_regular(&gamma),
    };
    LegendreCurve::new(gamma, nu)
}

/// `max |ℓ - κ|β||` over grid points with `|β| > sing_tol`, relative to
/// `max(|ℓ|, 1/scale)`.
pub fn check_ell_kappa_relation<T: Real>(lc: &LegendreCurve<T>) -> Result<Check<T>> {
    let cp = legendre_curvature(lc)?;
    let thr = CuspThresholds::for_pair(&cp);
    let ell_scale = cp.ell_scale();
    let mut worst = T::zero();
    let mut used = 0usize;
    for ((&t, &l), &b) in cp.grid.iter().zip(&cp.ell).zip(&cp.beta) {
        if b.abs() <= thr.beta.zero {
            continue;
        }
        let (g1, g2) = (lc.gamma().d1(t), lc.gamma().d2(t));
        let s = g1.norm();
        let kappa = g1.det(g2) / (s * s * s);
        let r = (l - kappa * b.abs()).abs() / l.abs().max(ell_scale);
        worst = worst.max(r);
        used += 1;
    }
    if used == 0 {
        return Err(Error::EmptyRegularSubgrid);
    }
    Ok(Check::new(worst, T::lit(CROSS_TOL)))
}

/// Local type of a point of a Legendre curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspKind {
    Regular,
    Cusp32,
    Cusp52,
    Cusp43,
    Cusp53,
    Inconclusive,
}

impl CuspKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CuspKind::Regular => "regular",
            CuspKind::Cusp32 => "cusp_3_2",
            CuspKind::Cusp52 => "cusp_5_2",
            CuspKind::Cusp43 => "cusp_4_3",
            CuspKind::Cusp53 => "cusp_5_3",
            CuspKind::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for CuspKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Values the classification was decided on.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CuspWitness<T> {
    pub beta: T,
    pub beta_d1: T,
    pub beta_d2: T,
    pub ell: T,
    pub ell_d1: T,
    pub ell_d2: T,
    /// `ℓ̈β̇ - ℓ̇β̈`.
    pub combo: T,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CuspReport<T> {
    pub t0: T,
    pub kind: CuspKind,
    pub witness: CuspWitness<T>,
}

/// A "zero" and a larger "nonzero" threshold; values between the two are
/// neither.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Level<T> {
    pub zero: T,
    pub nonzero: T,
}

impl<T: Real> Level<T> {
    /// `SING_REL · scale` and `NZ_FACTOR` times that.
    pub fn scaled(scale: T) -> Self {
        let zero = T::lit(SING_REL) * scale;
        Level {
            zero,
            nonzero: T::lit(NZ_FACTOR) * zero,
        }
    }

    pub fn is_zero(&self, v: T) -> bool {
        v.abs() <= self.zero
    }

    pub fn is_nonzero(&self, v: T) -> bool {
        v.abs() > self.nonzero
    }
}

/// Thresholds for every quantity entering the cusp criteria.
///
/// With `B = max|β|`, `p` the parameter scale and `Λ = 1/p`, each derivative
/// is measured against the size it has for a curve of that extent: `β̇`
/// against `B/p`, `ℓ̇` against `Λ/p`, and so on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CuspThresholds<T> {
    pub beta: Level<T>,
    pub beta_d1: Level<T>,
    pub beta_d2: Level<T>,
    pub ell: Level<T>,
    pub ell_d1: Level<T>,
    pub ell_d2: Level<T>,
    pub combo: Level<T>,
}

impl<T: Real> CuspThresholds<T> {
    pub fn for_pair(cp: &CurvaturePair<T>) -> Self {
        let p = cp.parameter_scale();
        let b = cp.max_abs_beta();
        let l = cp.ell_scale();
        CuspThresholds {
            beta: Level::scaled(b),
            beta_d1: Level::scaled(b / p),
            beta_d2: Level::scaled(b / (p * p)),
            ell: Level::scaled(l),
            ell_d1: Level::scaled(l / p),
            ell_d2: Level::scaled(l / (p * p)),
            combo: Level::scaled(l * b / (p * p * p)),
        }
    }
}

/// Applies the cusp criteria at `t0` in the order 3/2, 5/2, 4/3, 5/3.
pub fn classify_at<T: Real>(cp: &CurvaturePair<T>, thr: &CuspThresholds<T>, t0: T) -> CuspReport<T> {
    let j = cp.jet(t0);
    let w = CuspWitness {
        beta: j.beta,
        beta_d1: j.beta_d1,
        beta_d2: j.beta_d2,
        ell: j.ell,
        ell_d1: j.ell_d1,
        ell_d2: j.ell_d2,
        combo: j.ell_d2 * j.beta_d1 - j.ell_d1 * j.beta_d2,
    };
    let kind = if !thr.beta.is_zero(w.beta) {
        CuspKind::Regular
    } else if thr.beta_d1.is_nonzero(w.beta_d1) && thr.ell.is_nonzero(w.ell) {
        CuspKind::Cusp32
    } else if thr.ell.is_zero(w.ell)
        && thr.beta_d1.is_nonzero(w.beta_d1)
        && thr.combo.is_nonzero(w.combo)
    {
        CuspKind::Cusp52
    } else if thr.beta_d1.is_zero(w.beta_d1)
        && thr.beta_d2.is_nonzero(w.beta_d2)
        && thr.ell.is_nonzero(w.ell)
    {
        CuspKind::Cusp43
    } else if thr.beta_d1.is_zero(w.beta_d1)
        && thr.beta_d2.is_nonzero(w.beta_d2)
        && thr.ell.is_zero(w.ell)
        && thr.ell_d1.is_nonzero(w.ell_d1)
    {
        CuspKind::Cusp53
    } else {
        CuspKind::Inconclusive
    };
    CuspReport { t0, kind, witness: w }
}

/// Bisection for a sign change of `f` on `[a, b]`.
fn bisect<T: Real>(f: impl Fn(T) -> T, mut a: T, mut b: T) -> T {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = a + (b - a) * T::lit(0.5);
        if !(m > a && m < b) {
            break;
        }
        let fm = f(m);
        if fm == T::zero() {
            return m;
        }
        if (fm < T::zero()) == (fa < T::zero()) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    a + (b - a) * T::lit(0.5)
}

/// Grid cells `(t_i, t_{i+1}, i, j)`, including the wrap-around cell of a
/// periodic grid.
fn cells<T: Real>(cp: &CurvaturePair<T>) -> Vec<(T, T, usize, usize)> {
    let n = cp.len();
    let h = cp.interval.step();
    let mut out: Vec<_> = (0..n - 1)
        .map(|i| (cp.grid[i], cp.grid[i + 1], i, i + 1))
        .collect();
    if cp.interval.periodic {
        out.push((cp.grid[n - 1], cp.grid[n - 1] + h, n - 1, 0));
    }
    out
}

/// Maps `t` into `[t_start, t_end)` for periodic intervals.
fn canonical<T: Real>(iv: &ParamInterval<T>, t: T) -> T {
    if !iv.periodic {
        return t;
    }
    let l = iv.length();
    let mut u = t - ((t - iv.t_start) / l).floor() * l;
    if u >= iv.t_end {
        u = u - l;
    }
    u
}

fn param_distance<T: Real>(iv: &ParamInterval<T>, a: T, b: T) -> T {
    let d = (a - b).abs();
    if iv.periodic {
        d.min(iv.length() - d)
    } else {
        d
    }
}

/// Zeros of `f` located from grid samples: exact zeros at nodes and
/// bisected sign changes between nodes.
fn sign_change_roots<T: Real>(
    cp: &CurvaturePair<T>,
    samples: &[T],
    f: impl Fn(T) -> T,
) -> Vec<T> {
    let mut roots = Vec::new();
    for (i, &v) in samples.iter().enumerate() {
        if v == T::zero() {
            roots.push(cp.grid[i]);
        }
    }
    for (a, b, i, j) in cells(cp) {
        let (fa, fb) = (samples[i], samples[j]);
        if fa != T::zero() && fb != T::zero() && (fa < T::zero()) != (fb < T::zero()) {
            roots.push(canonical(&cp.interval, bisect(&f, a, b)));
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    roots
}

/// Candidate zeros of `β`: sign changes, and local minima of `|β|` refined
/// to a zero of `β̇` where one brackets.
fn beta_candidates<T: Real>(cp: &CurvaturePair<T>, thr: &CuspThresholds<T>) -> Vec<T> {
    let n = cp.len();
    let h = cp.interval.step();
    let mut cands = sign_change_roots(cp, &cp.beta, |t| cp.beta_at(t));
    for i in 0..n {
        let (prev, next) = if cp.interval.periodic {
            ((i + n - 1) % n, (i + 1) % n)
        } else if i == 0 || i == n - 1 {
            let t = cp.grid[i];
            if thr.beta.is_zero(cp.beta[i]) {
                cands.push(t);
            }
            continue;
        } else {
            (i - 1, i + 1)
        };
        let b = cp.beta[i].abs();
        if !(b <= cp.beta[prev].abs() && b <= cp.beta[next].abs()) {
            continue;
        }
        let (a, c) = (cp.grid[i] - h, cp.grid[i] + h);
        let (da, dc) = (cp.beta_d1_at(a), cp.beta_d1_at(c));
        let t = if (da < T::zero()) != (dc < T::zero()) {
            bisect(|t| cp.beta_d1_at(t), a, c)
        } else {
            cp.grid[i]
        };
        cands.push(canonical(&cp.interval, t));
    }
    cands.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));

    // merge candidates closer than two cells, keeping the smallest |β|
    let mut clusters: Vec<T> = Vec::new();
    for t in cands {
        match clusters.last_mut() {
            Some(last) if param_distance(&cp.interval, *last, t) <= h + h => {
                if cp.beta_at(t).abs() < cp.beta_at(*last).abs() {
                    *last = t;
                }
            }
            _ => clusters.push(t),
        }
    }
    if clusters.len() > 1 {
        let (first, last) = (clusters[0], clusters[clusters.len() - 1]);
        if param_distance(&cp.interval, first, last) <= h + h {
            if cp.beta_at(last).abs() < cp.beta_at(first).abs() {
                clusters[0] = last;
            }
            clusters.pop();
        }
    }
    clusters
}

/// Singular points (zeros of `β`) with their cusp type, using the default
/// thresholds of [`CuspThresholds::for_pair`].
pub fn classify_singularities<T: Real>(cp: &CurvaturePair<T>) -> Vec<CuspReport<T>> {
    classify_singularities_with(cp, &CuspThresholds::for_pair(cp))
}

pub fn classify_singularities_with<T: Real>(
    cp: &CurvaturePair<T>,
    thr: &CuspThresholds<T>,
) -> Vec<CuspReport<T>> {
    beta_candidates(cp, thr)
        .into_iter()
        .filter(|&t| thr.beta.is_zero(cp.beta_at(t)))
        .map(|t| classify_at(cp, thr, t))
        .collect()
}

/// Zeros of `ℓ`: exact zeros at grid points and sign changes refined by
/// bisection of the interpolated `ℓ`.
pub fn inflection_points<T: Real>(cp: &CurvaturePair<T>) -> Vec<T> {
    let mut roots = sign_change_roots(cp, &cp.ell, |t| cp.ell_at(t));
    roots.dedup_by(|a, b| param_distance(&cp.interval, *a, *b) <= T::lit(1e-12));
    roots
}

/// Frenet frame of `γ` as a regular curve at one parameter value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegularFrame<T> {
    pub t: T,
    /// Unit tangent `sign(β) μ`.
    pub tangent: Vec2<T>,
    /// Unit normal `J(tangent) = -sign(β) ν`.
    pub normal: Vec2<T>,
    pub sign: T,
}

/// Regular Frenet frames on the grid points of `[t_a, t_b]`.
///
/// Fails if `β` vanishes (or changes sign) anywhere in the range.
pub fn to_regular_frames<T: Real>(
    lc: &LegendreCurve<T>,
    t_a: T,
    t_b: T,
) -> Result<Vec<RegularFrame<T>>> {
    let grid = lc.grid();
    let beta: Vec<T> = grid.iter().map(|&t| lc.gamma().d1(t).dot(lc.mu(t))).collect();
    let zero = T::lit(SING_REL) * max_abs(&beta);
    let mut out: Vec<RegularFrame<T>> = Vec::new();
    for (&t, &b) in grid.iter().zip(&beta) {
        if t < t_a || t > t_b {
            continue;
        }
        if b.abs() <= zero {
            return Err(Error::SingularInSubinterval { t: t.to_f64_lossy() });
        }
        let s = sign(b);
        if let Some(prev) = out.last() {
            if prev.sign != s {
                return Err(Error::SingularInSubinterval { t: t.to_f64_lossy() });
            }
        }
        let tangent = lc.mu(t) * s;
        out.push(RegularFrame {
            t,
            tangent,
            normal: tangent.rotate_j(),
            sign: s,
        });
    }
    if out.is_empty() {
        return Err(Error::EmptyRegularSubgrid);
    }
    Ok(out)
}
