//! Parametrized plane curves: closed-form built-ins and uniformly sampled
//! data, derivatives up to third order, and arc-length reparametrization.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::diff::{self, UniformGrid};
use crate::error::{Error, Result};
use crate::plane::{five_point, Vec2};
use crate::scalar::Real;

/// Smallest admissible number of samples on a parameter interval.
pub const MIN_SAMPLES: usize = 16;
/// Default grid size.
pub const DEFAULT_SAMPLES: usize = 1024;
/// Relative tolerance for analytic-vs-difference derivative checks.
pub const FD_TOL: f64 = 1e-5;
/// Relative spacing tolerance when ingesting sampled curves.
const UNIFORM_TOL: f64 = 1e-9;

/// A parameter interval with its sampling grid.
///
/// Periodic intervals are half-open: the grid is `t_start + i·(len/n)` for
/// `i < n`. Otherwise both ends are grid points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamInterval<T> {
    pub t_start: T,
    pub t_end: T,
    pub n_samples: usize,
    pub periodic: bool,
}

impl<T: Real> ParamInterval<T> {
    pub fn new(t_start: T, t_end: T, n_samples: usize, periodic: bool) -> Result<Self> {
        if !(t_start.is_finite() && t_end.is_finite()) {
            return Err(Error::NonFinite(format!("[{t_start}, {t_end}]")));
        }
        if !(t_start < t_end) {
            return Err(Error::InvalidParameter(format!(
                "interval [{t_start}, {t_end}] is empty"
            )));
        }
        if n_samples < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                min: MIN_SAMPLES,
                got: n_samples,
            });
        }
        Ok(ParamInterval {
            t_start,
            t_end,
            n_samples,
            periodic,
        })
    }

    /// `[0, 2π)` sampled periodically.
    pub fn full_turn(n_samples: usize) -> Result<Self> {
        Self::new(T::zero(), T::pi() + T::pi(), n_samples, true)
    }

    pub fn length(&self) -> T {
        self.t_end - self.t_start
    }

    pub fn step(&self) -> T {
        let cells = if self.periodic {
            self.n_samples
        } else {
            self.n_samples - 1
        };
        self.length() / T::from_count(cells)
    }

    pub fn uniform_grid(&self) -> UniformGrid<T> {
        UniformGrid {
            t0: self.t_start,
            h: self.step(),
            n: self.n_samples,
            periodic: self.periodic,
        }
    }

    pub fn grid(&self) -> Vec<T> {
        self.uniform_grid().nodes()
    }

    /// Same interval with a different sample count.
    pub fn with_samples(&self, n_samples: usize) -> Result<Self> {
        Self::new(self.t_start, self.t_end, n_samples, self.periodic)
    }
}

/// Whether a curve is given in closed form or by samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    Analytic,
    Sampled,
}

type VecFn<T> = Arc<dyn Fn(T) -> Vec2<T> + Send + Sync>;

#[derive(Clone)]
enum Repr<T> {
    Analytic([VecFn<T>; 4]),
    Sampled {
        grid: UniformGrid<T>,
        // position, d1, d2, d3; x and y components
        xs: Arc<[Vec<T>; 4]>,
        ys: Arc<[Vec<T>; 4]>,
    },
}

/// A parametrized plane curve with derivatives up to order three.
#[derive(Clone)]
pub struct CurveModel<T> {
    repr: Repr<T>,
    interval: ParamInterval<T>,
    diameter: T,
    max_speed: T,
    min_speed: T,
}

impl<T: Real> fmt::Debug for CurveModel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CurveModel")
            .field("kind", &self.kind())
            .field("interval", &self.interval)
            .field("diameter", &self.diameter)
            .finish()
    }
}

impl<T: Real> CurveModel<T> {
    /// Closed-form curve from its position and first three derivatives.
    pub fn analytic(
        interval: ParamInterval<T>,
        position: impl Fn(T) -> Vec2<T> + Send + Sync + 'static,
        d1: impl Fn(T) -> Vec2<T> + Send + Sync + 'static,
        d2: impl Fn(T) -> Vec2<T> + Send + Sync + 'static,
        d3: impl Fn(T) -> Vec2<T> + Send + Sync + 'static,
    ) -> Self {
        Self::finish(
            Repr::Analytic([
                Arc::new(position),
                Arc::new(d1),
                Arc::new(d2),
                Arc::new(d3),
            ]),
            interval,
        )
    }

    /// Curve through `positions` on the grid of `interval`; derivatives come
    /// from fourth-order differences.
    pub fn from_grid_samples(interval: ParamInterval<T>, positions: &[Vec2<T>]) -> Result<Self> {
        if positions.len() != interval.n_samples {
            return Err(Error::GridMismatch);
        }
        if let Some(p) = positions.iter().find(|p| !p.is_finite()) {
            return Err(Error::NonFinite(p.to_string()));
        }
        let grid = interval.uniform_grid();
        let x: Vec<T> = positions.iter().map(|p| p.x).collect();
        let y: Vec<T> = positions.iter().map(|p| p.y).collect();
        let d = |v: &[T], k| diff::derivative(v, grid.h, k, grid.periodic);
        let xs = [d(&x, 1), d(&x, 2), d(&x, 3)];
        let ys = [d(&y, 1), d(&y, 2), d(&y, 3)];
        let [x1, x2, x3] = xs;
        let [y1, y2, y3] = ys;
        Ok(Self::finish(
            Repr::Sampled {
                grid,
                xs: Arc::new([x, x1, x2, x3]),
                ys: Arc::new([y, y1, y2, y3]),
            },
            interval,
        ))
    }

    fn finish(repr: Repr<T>, interval: ParamInterval<T>) -> Self {
        let mut c = CurveModel {
            repr,
            interval,
            diameter: T::zero(),
            max_speed: T::zero(),
            min_speed: T::zero(),
        };
        let grid = interval.grid();
        let pts: Vec<Vec2<T>> = grid.iter().map(|&t| c.position(t)).collect();
        c.diameter = bbox_diagonal(&pts);
        let speeds: Vec<T> = grid.iter().map(|&t| c.d1(t).norm()).collect();
        c.max_speed = speeds.iter().fold(T::zero(), |m, &s| m.max(s));
        c.min_speed = speeds.iter().fold(T::infinity(), |m, &s| m.min(s));
        c
    }

    pub fn kind(&self) -> CurveKind {
        match self.repr {
            Repr::Analytic(_) => CurveKind::Analytic,
            Repr::Sampled { .. } => CurveKind::Sampled,
        }
    }

    pub fn interval(&self) -> &ParamInterval<T> {
        &self.interval
    }

    pub fn grid(&self) -> Vec<T> {
        self.interval.grid()
    }

    fn derivative(&self, k: usize, t: T) -> Vec2<T> {
        match &self.repr {
            Repr::Analytic(f) => f[k](t),
            Repr::Sampled { grid, xs, ys } => {
                if k < 3 {
                    Vec2 {
                        x: grid.hermite(&xs[k], &xs[k + 1], t),
                        y: grid.hermite(&ys[k], &ys[k + 1], t),
                    }
                } else {
                    Vec2 {
                        x: grid.lagrange4(&xs[3], t),
                        y: grid.lagrange4(&ys[3], t),
                    }
                }
            }
        }
    }

    #[inline]
    pub fn position(&self, t: T) -> Vec2<T> {
        self.derivative(0, t)
    }

    #[inline]
    pub fn d1(&self, t: T) -> Vec2<T> {
        self.derivative(1, t)
    }

    #[inline]
    pub fn d2(&self, t: T) -> Vec2<T> {
        self.derivative(2, t)
    }

    #[inline]
    pub fn d3(&self, t: T) -> Vec2<T> {
        self.derivative(3, t)
    }

    /// The curve `-γ`, with every derivative negated exactly.
    pub fn negated(&self) -> Self {
        let repr = match &self.repr {
            Repr::Analytic(f) => {
                let g = |k: usize| {
                    let f = f[k].clone();
                    Arc::new(move |t| -f(t)) as VecFn<T>
                };
                Repr::Analytic([g(0), g(1), g(2), g(3)])
            }
            Repr::Sampled { grid, xs, ys } => {
                let neg = |a: &[Vec<T>; 4]| Arc::new(a.clone().map(|v| v.iter().map(|&x| -x).collect()));
                Repr::Sampled {
                    grid: *grid,
                    xs: neg(xs),
                    ys: neg(ys),
                }
            }
        };
        CurveModel {
            repr,
            interval: self.interval,
            diameter: self.diameter,
            max_speed: self.max_speed,
            min_speed: self.min_speed,
        }
    }

    /// Positions on the interval grid.
    pub fn sample_positions(&self) -> Vec<Vec2<T>> {
        self.grid().into_iter().map(|t| self.position(t)).collect()
    }

    /// Diagonal of the bounding box of the grid samples.
    pub fn diameter(&self) -> T {
        self.diameter
    }

    /// Largest `|γ̇|` on the grid.
    pub fn max_speed(&self) -> T {
        self.max_speed
    }

    /// Smallest `|γ̇|` on the grid.
    pub fn min_speed(&self) -> T {
        self.min_speed
    }

    /// Scale-aware singularity threshold `1e-7 · diameter / interval length`.
    pub fn reg_tol(&self) -> T {
        T::lit(1e-7) * self.diameter / self.interval.length()
    }

    /// Closure tolerance `1e-9 · diameter`.
    pub fn geom_tol(&self) -> T {
        T::lit(1e-9) * self.diameter
    }

    /// `|γ(t_end) - γ(t_start)|`.
    pub fn closure_gap(&self) -> T {
        (self.position(self.interval.t_end) - self.position(self.interval.t_start)).norm()
    }

    /// Largest relative mismatch between `d1` and a central difference of the
    /// position, relative to the size of the second derivative.
    pub fn d1_mismatch(&self) -> T {
        let h = self.interval.step() * T::lit(1e-2);
        let mut worst = T::zero();
        for t in self.grid() {
            let fd = five_point(|u| self.position(u), t, h);
            let scale = self.d1(t).norm().max(self.d2(t).norm()).max(T::one());
            worst = worst.max((fd - self.d1(t)).norm() / scale);
        }
        worst
    }

    /// Fails unless `min |γ̇| > reg_tol` on the grid.
    pub fn require_regular(&self) -> Result<()> {
        let tol = self.reg_tol();
        let mut worst: Option<(T, T)> = None;
        for t in self.grid() {
            let s = self.d1(t).norm();
            if s <= tol && worst.is_none_or(|(_, w)| s < w) {
                worst = Some((t, s));
            }
        }
        match worst {
            None => Ok(()),
            Some((t, s)) => Err(Error::Singular {
                t: t.to_f64_lossy(),
                speed: s.to_f64_lossy(),
                tol: tol.to_f64_lossy(),
            }),
        }
    }
}

fn bbox_diagonal<T: Real>(pts: &[Vec2<T>]) -> T {
    if pts.is_empty() {
        return T::zero();
    }
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for p in pts {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (hi - lo).norm()
}

/// The closed-form curves shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Builtin<T> {
    /// `origin + t · direction`.
    Line { origin: Vec2<T>, direction: Vec2<T> },
    /// `center + r (cos t, sin t)`.
    Circle { center: Vec2<T>, radius: T },
    /// `center + (a cos t, b sin t)`.
    Ellipse { center: Vec2<T>, a: T, b: T },
    /// `center + scale (cos³ t, sin³ t)`.
    Astroid { center: Vec2<T>, scale: T },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BuiltinSpec<T> {
    pub shape: Builtin<T>,
    pub interval: ParamInterval<T>,
}

impl<T: Real> BuiltinSpec<T> {
    /// Spec with the shape's natural interval: `[0, 2π)` periodic for closed
    /// shapes, `[-1, 1]` for the line.
    pub fn new(shape: Builtin<T>, n_samples: usize) -> Result<Self> {
        let interval = match shape {
            Builtin::Line { .. } => ParamInterval::new(-T::one(), T::one(), n_samples, false)?,
            _ => ParamInterval::full_turn(n_samples)?,
        };
        Ok(BuiltinSpec { shape, interval })
    }

    /// Builds a spec from a shape name and named parameters.
    ///
    /// | name    | parameters (defaults)                  |
    /// |---------|----------------------------------------|
    /// | line    | `x0`, `y0` (0), `dx` (1), `dy` (0)      |
    /// | circle  | `r` (1), `cx`, `cy` (0)                 |
    /// | ellipse | `a` (2), `b` (1), `cx`, `cy` (0)        |
    /// | astroid | `a` (1), `cx`, `cy` (0)                 |
    ///
    /// `t0`, `t1` override the interval ends (the result is then not periodic
    /// unless it spans exactly one turn of a closed shape).
    pub fn from_params(name: &str, params: &BTreeMap<String, T>, n_samples: usize) -> Result<Self> {
        let allowed: &[&str] = match name {
            "line" => &["x0", "y0", "dx", "dy", "t0", "t1"],
            "circle" => &["r", "cx", "cy", "t0", "t1"],
            "ellipse" => &["a", "b", "cx", "cy", "t0", "t1"],
            "astroid" => &["a", "cx", "cy", "t0", "t1"],
            other => return Err(Error::UnknownBuiltin(other.to_string())),
        };
        if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!(
                "`{k}` is not a parameter of {name}"
            )));
        }
        let get = |k: &str, d: f64| params.get(k).copied().unwrap_or_else(|| T::lit(d));
        let center = Vec2::try_new(get("cx", 0.0), get("cy", 0.0))?;
        let shape = match name {
            "line" => Builtin::Line {
                origin: Vec2::try_new(get("x0", 0.0), get("y0", 0.0))?,
                direction: Vec2::try_new(get("dx", 1.0), get("dy", 0.0))?,
            },
            "circle" => Builtin::Circle {
                center,
                radius: get("r", 1.0),
            },
            "ellipse" => Builtin::Ellipse {
                center,
                a: get("a", 2.0),
                b: get("b", 1.0),
            },
            _ => Builtin::Astroid {
                center,
                scale: get("a", 1.0),
            },
        };
        let mut spec = Self::new(shape, n_samples)?;
        if params.contains_key("t0") || params.contains_key("t1") {
            let t0 = params.get("t0").copied().unwrap_or(spec.interval.t_start);
            let t1 = params.get("t1").copied().unwrap_or(spec.interval.t_end);
            let full = T::pi() + T::pi();
            let periodic = !matches!(shape, Builtin::Line { .. })
                && ((t1 - t0) - full).abs() <= T::lit(1e-12) * full;
            spec.interval = ParamInterval::new(t0, t1, n_samples, periodic)?;
        }
        Ok(spec)
    }
}

fn require_positive<T: Real>(what: &str, v: T) -> Result<()> {
    if v > T::zero() && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} must be positive, got {v}")))
    }
}

/// Builds the closed-form model of a built-in curve.
pub fn build_builtin<T: Real>(spec: &BuiltinSpec<T>) -> Result<CurveModel<T>> {
    let iv = spec.interval;
    let v = |x: T, y: T| Vec2 { x, y };
    Ok(match spec.shape {
        Builtin::Line { origin, direction } => {
            if direction.norm() == T::zero() {
                return Err(Error::InvalidParameter("line direction is zero".into()));
            }
            CurveModel::analytic(
                iv,
                move |t| origin + direction * t,
                move |_| direction,
                |_| Vec2::zero(),
                |_| Vec2::zero(),
            )
        }
        Builtin::Circle { center, radius: r } => {
            require_positive("radius", r)?;
            CurveModel::analytic(
                iv,
                move |t: T| center + v(r * t.cos(), r * t.sin()),
                move |t: T| v(-r * t.sin(), r * t.cos()),
                move |t: T| v(-r * t.cos(), -r * t.sin()),
                move |t: T| v(r * t.sin(), -r * t.cos()),
            )
        }
        Builtin::Ellipse { center, a, b } => {
            require_positive("semi-axis a", a)?;
            require_positive("semi-axis b", b)?;
            CurveModel::analytic(
                iv,
                move |t: T| center + v(a * t.cos(), b * t.sin()),
                move |t: T| v(-a * t.sin(), b * t.cos()),
                move |t: T| v(-a * t.cos(), -b * t.sin()),
                move |t: T| v(a * t.sin(), -b * t.cos()),
            )
        }
        Builtin::Astroid { center, scale: k } => {
            require_positive("astroid scale", k)?;
            let three = T::lit(3.0);
            let six = T::lit(6.0);
            let seven = T::lit(7.0);
            CurveModel::analytic(
                iv,
                move |t: T| {
                    let (s, c) = t.sin_cos();
                    center + v(k * c * c * c, k * s * s * s)
                },
                move |t: T| {
                    let (s, c) = t.sin_cos();
                    v(-three * k * c * c * s, three * k * s * s * c)
                },
                move |t: T| {
                    // d/dt(-3c²s) = 6cs² - 3c³ ; d/dt(3s²c) = 6sc² - 3s³
                    let (s, c) = t.sin_cos();
                    v(
                        k * (six * c * s * s - three * c * c * c),
                        k * (six * s * c * c - three * s * s * s),
                    )
                },
                move |t: T| {
                    // d/dt(6cs² - 3c³) = 21c²s - 6s³ ; d/dt(6sc² - 3s³) = 6c³ - 21s²c
                    let (s, c) = t.sin_cos();
                    v(
                        k * (three * seven * c * c * s - six * s * s * s),
                        k * (six * c * c * c - three * seven * s * s * c),
                    )
                },
            )
        }
    })
}

/// Builds a sampled curve from `(t, point)` pairs on a uniform grid.
///
/// For periodic input the interval is `[t_first, t_last + h)`; a trailing
/// sample that repeats the first point is dropped.
pub fn build_sampled<T: Real>(points: &[(T, Vec2<T>)], periodic: bool) -> Result<CurveModel<T>> {
    if points.len() < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: points.len(),
        });
    }
    for (i, w) in points.windows(2).enumerate() {
        if !(w[1].0 > w[0].0) {
            return Err(Error::NotIncreasing { index: i + 1 });
        }
    }
    let n = points.len();
    let t0 = points[0].0;
    let h = (points[n - 1].0 - t0) / T::from_count(n - 1);
    let mut worst = T::zero();
    for (i, (t, _)) in points.iter().enumerate() {
        let dev = (*t - (t0 + h * T::from_count(i))).abs() / h;
        worst = worst.max(dev);
    }
    if worst > T::lit(UNIFORM_TOL) {
        return Err(Error::NonUniformGrid {
            deviation: worst.to_f64_lossy(),
        });
    }
    let mut pos: Vec<Vec2<T>> = points.iter().map(|p| p.1).collect();
    let mut t_last = points[n - 1].0;
    if periodic {
        let diam = bbox_diagonal(&pos);
        if (pos[n - 1] - pos[0]).norm() <= T::lit(1e-9) * diam && n > MIN_SAMPLES {
            pos.pop();
            t_last = points[n - 2].0;
        }
    }
    let interval = if periodic {
        ParamInterval::new(t0, t_last + h, pos.len(), true)?
    } else {
        ParamInterval::new(t0, t_last, pos.len(), false)?
    };
    CurveModel::from_grid_samples(interval, &pos)
}

/// Piecewise cubic through increasing data, with Fritsch–Carlson slope limiting.
#[derive(Clone, Debug)]
struct MonotoneCubic<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    ms: Vec<T>,
}

impl<T: Real> MonotoneCubic<T> {
    fn new(xs: Vec<T>, ys: Vec<T>, mut ms: Vec<T>) -> Self {
        let three = T::lit(3.0);
        for k in 0..xs.len() - 1 {
            let delta = (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]);
            if delta == T::zero() {
                ms[k] = T::zero();
                ms[k + 1] = T::zero();
                continue;
            }
            let a = ms[k] / delta;
            let b = ms[k + 1] / delta;
            let r2 = a * a + b * b;
            if r2 > three * three {
                let tau = three / r2.sqrt();
                ms[k] = tau * a * delta;
                ms[k + 1] = tau * b * delta;
            }
        }
        MonotoneCubic { xs, ys, ms }
    }

    fn eval(&self, x: T) -> T {
        let n = self.xs.len();
        let k = match self
            .xs
            .binary_search_by(|p| p.partial_cmp(&x).unwrap_or(std::cmp::Ordering::Less))
        {
            Ok(i) => i.min(n - 2),
            Err(0) => 0,
            Err(i) => (i - 1).min(n - 2),
        };
        let h = self.xs[k + 1] - self.xs[k];
        let s = (x - self.xs[k]) / h;
        diff::hermite(self.ys[k], self.ys[k + 1], self.ms[k], self.ms[k + 1], h, s)
    }
}

/// Reparametrizes a regular curve by arc length.
///
/// Arc length is accumulated with composite Simpson per grid cell and inverted
/// with a monotone cubic. The result is closed-form in `s` through the chain
/// rule, so `|γ'(s)| = 1` up to rounding.
pub fn arclength_reparametrize<T: Real>(c: &CurveModel<T>) -> Result<CurveModel<T>> {
    c.require_regular()?;
    let iv = *c.interval();
    let mut ts = iv.grid();
    if iv.periodic {
        ts.push(iv.t_end);
    }
    let speed = |t: T| c.d1(t).norm();
    let mut s_nodes = Vec::with_capacity(ts.len());
    let mut acc = T::zero();
    s_nodes.push(acc);
    let sixth = T::lit(1.0 / 6.0);
    let four = T::lit(4.0);
    for w in ts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = a + (b - a) * T::lit(0.5);
        acc = acc + (b - a) * sixth * (speed(a) + four * speed(mid) + speed(b));
        s_nodes.push(acc);
    }
    let total = acc;
    let slopes: Vec<T> = ts.iter().map(|&t| T::one() / speed(t)).collect();
    let inverse = MonotoneCubic::new(s_nodes, ts, slopes);

    let new_iv = ParamInterval::new(T::zero(), total, iv.n_samples, iv.periodic)?;
    let period_t = iv.length();
    let src = Arc::new((c.clone(), inverse, total, period_t, iv.periodic));

    let t_of = {
        let src = src.clone();
        move |s: T| -> T {
            let (_, inv, total, period_t, periodic) = &*src;
            if *periodic {
                let k = (s / *total).floor();
                inv.eval(s - k * *total) + k * *period_t
            } else {
                inv.eval(s)
            }
        }
    };
    let t_of = Arc::new(t_of);

    let (sp, tp) = (src.clone(), t_of.clone());
    let position = move |s: T| sp.0.position(tp(s));
    let (sp, tp) = (src.clone(), t_of.clone());
    let d1 = move |s: T| {
        let v = sp.0.d1(tp(s));
        v / v.norm()
    };
    let (sp, tp) = (src.clone(), t_of.clone());
    let d2 = move |s: T| {
        let t = tp(s);
        let (g1, g2) = (sp.0.d1(t), sp.0.d2(t));
        let u = T::one() / g1.norm();
        let du = -g1.dot(g2) * u.powi(4);
        g2 * (u * u) + g1 * du
    };
    let (sp, tp) = (src, t_of);
    let d3 = move |s: T| {
        let t = tp(s);
        let (g1, g2, g3) = (sp.0.d1(t), sp.0.d2(t), sp.0.d3(t));
        let u = T::one() / g1.norm();
        let gg = g1.dot(g2);
        let du = -gg * u.powi(4);
        let ddu = -(g2.norm_sq() + g1.dot(g3)) * u.powi(5) + T::lit(4.0) * gg * gg * u.powi(7);
        g3 * u.powi(3) + g2 * (T::lit(3.0) * u * du) + g1 * ddu
    };
    Ok(CurveModel::analytic(new_iv, position, d1, d2, d3))
}

/// Signed curvature `det(γ̇, γ̈) / |γ̇|³` of a regular curve.
pub fn regular_curvature<T: Real>(c: &CurveModel<T>, t: T) -> Result<T> {
    let g1 = c.d1(t);
    let speed = g1.norm();
    let tol = c.reg_tol();
    if speed <= tol {
        return Err(Error::Singular {
            t: t.to_f64_lossy(),
            speed: speed.to_f64_lossy(),
            tol: tol.to_f64_lossy(),
        });
    }
    Ok(g1.det(c.d2(t)) / (speed * speed * speed))
}
