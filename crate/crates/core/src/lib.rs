//! Legendre curves in the Euclidean plane: curvature of fronts, cusp
//! classification and Bertrand-type mates.
//!
//! The geometry is generic over [`Real`] (`f32` or `f64`); the aliases at
//! the crate root fix the scalar to `f64`.

// `!(a <= b)` is used on purpose so that NaN fails the comparison
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bertrand;
pub mod check;
pub mod curve;
pub mod diff;
pub mod error;
pub mod legendre;
pub mod plane;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub use bertrand::{MateConfig, SolveMode, SpecialOp};
pub use check::Check;
pub use curve::{Builtin, BuiltinSpec, CurveKind, ParamInterval};
pub use legendre::{CuspKind, CuspReport};

/// `f64` aliases.
pub type Vec2 = plane::Vec2<f64>;
pub type UnitVec2 = plane::UnitVec2<f64>;
pub type AngleFn = plane::AngleFn<f64>;
pub type CurveModel = curve::CurveModel<f64>;
pub type LegendreCurve = legendre::LegendreCurve<f64>;
pub type CurvaturePair = legendre::CurvaturePair<f64>;
pub type MatePair = bertrand::MatePair<f64>;
pub type LambdaSolution = bertrand::LambdaSolution<f64>;
