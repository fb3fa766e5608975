//! Vectors in the Euclidean plane, the quarter-turn `J`, and angle-framed
//! direction fields.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Tolerance on `| |u| - 1 |` for vectors claimed to be unit.
pub const UNIT_TOL: f64 = 1e-9;

/// Below this deviation a unit vector is kept as is; above it (and up to
/// [`UNIT_TOL`]) it is renormalized.
const RENORMALIZE_BELOW: f64 = 1e-12;

/// A point or direction in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    /// Builds a vector; panics on non-finite components.
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        assert!(
            x.is_finite() && y.is_finite(),
            "Vec2 components must be finite, got ({x}, {y})"
        );
        Vec2 { x, y }
    }

    pub fn try_new(x: T, y: T) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Vec2 { x, y })
        } else {
            Err(Error::NonFinite(format!("({x}, {y})")))
        }
    }

    #[inline]
    pub fn zero() -> Self {
        Vec2 {
            x: T::zero(),
            y: T::zero(),
        }
    }

    #[inline]
    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// `det(self, other)`, the signed area of the spanned parallelogram.
    #[inline]
    pub fn det(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    /// Anti-clockwise rotation by a quarter turn: `(x, y) -> (-y, x)`.
    #[inline]
    pub fn rotate_j(self) -> Self {
        Vec2 {
            x: -self.y,
            y: self.x,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(self, other: Self) -> T {
        (self - other).norm()
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Vec2 {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl<T: Real> AddAssign for Vec2<T> {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Vec2 {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
}

impl<T: Real> SubAssign for Vec2<T> {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Vec2 {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        Vec2 {
            x: self.x * s,
            y: self.y * s,
        }
    }
}

impl<T: Real> Div<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        Vec2 {
            x: self.x / s,
            y: self.y / s,
        }
    }
}

impl<T: Real> fmt::Display for Vec2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Free-function form of [`Vec2::rotate_j`].
#[inline]
pub fn rotate_j<T: Real>(a: Vec2<T>) -> Vec2<T> {
    a.rotate_j()
}

#[inline]
pub fn dot<T: Real>(a: Vec2<T>, b: Vec2<T>) -> T {
    a.dot(b)
}

/// A vector of unit length, within [`UNIT_TOL`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVec2<T>(Vec2<T>);

impl<T: Real> UnitVec2<T> {
    /// Accepts `v` if it is unit within [`UNIT_TOL`], renormalizing small drift.
    pub fn try_from_vec(v: Vec2<T>) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite(v.to_string()));
        }
        let n = v.norm();
        let dev = (n - T::one()).abs();
        if dev <= T::lit(RENORMALIZE_BELOW) {
            Ok(UnitVec2(v))
        } else if dev <= T::lit(UNIT_TOL) {
            Ok(UnitVec2(v / n))
        } else {
            Err(Error::NotUnit {
                norm: n.to_f64_lossy(),
            })
        }
    }

    /// Direction of an arbitrary nonzero vector.
    pub fn normalize(v: Vec2<T>) -> Result<Self> {
        let n = v.norm();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::NotUnit {
                norm: n.to_f64_lossy(),
            });
        }
        Ok(UnitVec2(v / n))
    }

    /// `(cos a, sin a)`.
    #[inline]
    pub fn from_angle(a: T) -> Self {
        UnitVec2(Vec2::new(a.cos(), a.sin()))
    }

    #[inline]
    pub fn get(self) -> Vec2<T> {
        self.0
    }

    /// The companion `μ = J(ν)`.
    #[inline]
    pub fn rotate_j(self) -> Self {
        UnitVec2(self.0.rotate_j())
    }
}

impl<T: Real> Neg for UnitVec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        UnitVec2(-self.0)
    }
}

impl<T: Real> From<UnitVec2<T>> for Vec2<T> {
    fn from(u: UnitVec2<T>) -> Self {
        u.0
    }
}

/// `cos θ · ν + sin θ · J(ν)`: the direction at angle `θ` from `ν` in the
/// moving frame `{ν, μ}`.
#[inline]
pub fn frame_from_angle<T: Real>(nu: UnitVec2<T>, theta: T) -> UnitVec2<T> {
    let n = nu.get();
    let m = n.rotate_j();
    UnitVec2(n * theta.cos() + m * theta.sin())
}

/// Same as [`frame_from_angle`] on raw vectors; `nu` is assumed unit.
#[inline]
pub(crate) fn rotate_by<T: Real>(nu: Vec2<T>, theta: T) -> Vec2<T> {
    nu * theta.cos() + nu.rotate_j() * theta.sin()
}

/// Fourth-order central difference of `f` at `t`.
pub(crate) fn five_point<T: Real, V>(f: impl Fn(T) -> V, t: T, h: T) -> V
where
    V: Sub<Output = V> + Add<Output = V> + Mul<T, Output = V> + Div<T, Output = V> + Copy,
{
    let eight = T::lit(8.0);
    let (a, b, c, d) = (f(t - h - h), f(t - h), f(t + h), f(t + h + h));
    ((c - b) * eight - (d - a)) / (T::lit(12.0) * h)
}

type ScalarFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// An angle-valued function of the curve parameter together with its
/// derivative. Angles are plain radians and are never wrapped.
#[derive(Clone)]
pub struct AngleFn<T> {
    eval: ScalarFn<T>,
    deriv: ScalarFn<T>,
    constant: Option<T>,
}

impl<T: Real> AngleFn<T> {
    pub fn new(
        eval: impl Fn(T) -> T + Send + Sync + 'static,
        deriv: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        AngleFn {
            eval: Arc::new(eval),
            deriv: Arc::new(deriv),
            constant: None,
        }
    }

    pub fn constant(value: T) -> Self {
        AngleFn {
            eval: Arc::new(move |_| value),
            deriv: Arc::new(|_| T::zero()),
            constant: Some(value),
        }
    }

    #[inline]
    pub fn eval(&self, t: T) -> T {
        (self.eval)(t)
    }

    #[inline]
    pub fn deriv(&self, t: T) -> T {
        (self.deriv)(t)
    }

    /// The value when constructed with [`AngleFn::constant`].
    pub fn as_constant(&self) -> Option<T> {
        self.constant
    }

    /// Pointwise sum of two angle functions.
    pub fn plus(&self, other: &AngleFn<T>) -> AngleFn<T> {
        if let (Some(a), Some(b)) = (self.constant, other.constant) {
            return AngleFn::constant(a + b);
        }
        let (a, b) = (self.clone(), other.clone());
        let (da, db) = (self.clone(), other.clone());
        AngleFn::new(
            move |t| a.eval(t) + b.eval(t),
            move |t| da.deriv(t) + db.deriv(t),
        )
    }

    pub fn negated(&self) -> AngleFn<T> {
        if let Some(a) = self.constant {
            return AngleFn::constant(-a);
        }
        let (a, da) = (self.clone(), self.clone());
        AngleFn::new(move |t| -a.eval(t), move |t| -da.deriv(t))
    }

    /// Largest relative mismatch between `deriv` and a central difference of
    /// `eval` on `grid`.
    pub fn derivative_mismatch(&self, grid: &[T]) -> T {
        if grid.len() < 2 {
            return T::zero();
        }
        let h = (grid[1] - grid[0]) * T::lit(1e-2);
        let mut worst = T::zero();
        for &t in grid {
            let fd = five_point(|u| self.eval(u), t, h);
            let d = self.deriv(t);
            let rel = (fd - d).abs() / d.abs().max(T::one());
            worst = worst.max(rel);
        }
        worst
    }

    /// Checks `deriv` against central differences of `eval` within `fd_tol`.
    pub fn check_consistency(&self, grid: &[T], fd_tol: T) -> Result<()> {
        let m = self.derivative_mismatch(grid);
        if m <= fd_tol {
            Ok(())
        } else {
            Err(Error::InconsistentDerivative {
                what: "angle function",
                mismatch: m.to_f64_lossy(),
            })
        }
    }
}

/// A smooth real function with its derivative, such as a distance `λ(s)`.
pub type SmoothFn<T> = AngleFn<T>;

impl<T: Real> fmt::Debug for AngleFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constant {
            Some(c) => write!(f, "AngleFn::constant({c})"),
            None => f.write_str("AngleFn(<fn>)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn rotate_j_examples() {
        assert_eq!(rotate_j(Vec2::new(1.0, 0.0)), Vec2::new(0.0, 1.0));
        assert_eq!(rotate_j(Vec2::new(0.0, 0.0)), Vec2::new(-0.0, 0.0));
        assert_eq!(rotate_j(Vec2::new(3.0, 4.0)), Vec2::new(-4.0, 3.0));
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)), 0.0);
        assert_eq!(dot(Vec2::new(1.0, 2.0), Vec2::new(3.0, 4.0)), 11.0);
        let a = Vec2::new(3.0, 4.0);
        assert_eq!(dot(a, a), 25.0);
    }

    #[test]
    fn frame_from_angle_examples() {
        let e1 = UnitVec2::try_from_vec(Vec2::new(1.0, 0.0)).unwrap();
        let e2 = UnitVec2::try_from_vec(Vec2::new(0.0, 1.0)).unwrap();
        let a = frame_from_angle(e1, 0.0).get();
        assert!((a - Vec2::new(1.0, 0.0)).norm() < 1e-15);
        let b = frame_from_angle(e1, FRAC_PI_2).get();
        assert!((b - Vec2::new(0.0, 1.0)).norm() < 1e-15);
        let c = frame_from_angle(e2, PI).get();
        assert!((c - Vec2::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    #[should_panic]
    fn new_rejects_nan() {
        let _ = Vec2::new(f64::NAN, 0.0);
    }

    #[test]
    fn unit_vector_tolerances() {
        // exact: kept
        assert!(UnitVec2::try_from_vec(Vec2::new(0.6, 0.8)).is_ok());
        // drift inside unit_tol: renormalized
        let u = UnitVec2::try_from_vec(Vec2::new(1.0 + 5e-10, 0.0)).unwrap();
        assert_eq!(u.get().x, 1.0);
        // beyond unit_tol: rejected
        assert!(matches!(
            UnitVec2::try_from_vec(Vec2::new(1.0 + 1e-6, 0.0)),
            Err(Error::NotUnit { .. })
        ));
        assert!(UnitVec2::try_from_vec(Vec2 { x: f64::INFINITY, y: 0.0 }).is_err());
    }

    #[test]
    fn angle_fn_consistency() {
        let grid: Vec<f64> = (0..64).map(|i| i as f64 * 0.1).collect();
        let good = AngleFn::new(|t: f64| t.sin(), |t: f64| t.cos());
        assert!(good.check_consistency(&grid, 1e-5).is_ok());
        let bad = AngleFn::new(|t: f64| t.sin(), |t: f64| 2.0 * t.cos());
        assert!(bad.check_consistency(&grid, 1e-5).is_err());
        assert_eq!(AngleFn::constant(0.3).deriv(1.0), 0.0);
    }

    proptest! {
        #[test]
        fn j_is_orthogonal_and_quarter_turn(x in -1e3..1e3f64, y in -1e3..1e3f64) {
            let a = Vec2::new(x, y);
            let ja = a.rotate_j();
            prop_assert_eq!(a.dot(ja), 0.0);
            prop_assert_eq!(ja.rotate_j(), -a);
            prop_assert!((ja.norm() - a.norm()).abs() <= 1e-12 * (1.0 + a.norm()));
            let rel = (a.det(ja) - a.norm_sq()).abs() / (1.0 + a.norm_sq());
            prop_assert!(rel <= 1e-15);
        }

        #[test]
        fn unit_normal_is_orthogonal(phi in -10.0..10.0f64) {
            let nu = UnitVec2::from_angle(phi);
            prop_assert!(nu.get().dot(nu.rotate_j().get()).abs() <= 1e-15);
        }

        #[test]
        fn frame_angle_is_2pi_periodic(phi in -10.0..10.0f64, theta in -20.0..20.0f64) {
            let nu = UnitVec2::from_angle(phi);
            let a = frame_from_angle(nu, theta).get();
            let b = frame_from_angle(nu, theta + 2.0 * PI).get();
            prop_assert!((a - b).norm() <= 1e-12);
            prop_assert!((a.norm() - 1.0).abs() <= UNIT_TOL);
        }
    }
}
