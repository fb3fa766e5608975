use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("non-finite value {0}")]
    NonFinite(String),

    #[error("vector is not unit: norm {norm}")]
    NotUnit { norm: f64 },

    #[error("{what}: derivative disagrees with finite differences (relative mismatch {mismatch:e})")]
    InconsistentDerivative { what: &'static str, mismatch: f64 },

    #[error("unknown built-in curve `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sample grid is not uniform (relative spacing deviation {deviation:e})")]
    NonUniformGrid { deviation: f64 },

    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("sample parameters must be strictly increasing (index {index})")]
    NotIncreasing { index: usize },

    #[error("curve is singular at t = {t} (|speed| = {speed:e} <= {tol:e})")]
    Singular { t: f64, speed: f64, tol: f64 },

    #[error("not a Legendre curve: max |γ̇·ν| = {max:e} exceeds {tol:e}")]
    TangencyViolation { max: f64, tol: f64 },

    #[error("curves are defined on different parameter grids")]
    GridMismatch,

    #[error("no regular grid points to test")]
    EmptyRegularSubgrid,

    #[error("subinterval contains a singular point near t = {t}")]
    SingularInSubinterval { t: f64 },

    #[error("cos τ changes sign or vanishes only partly on the grid; split the interval")]
    MixedCosTau,

    #[error("algebraic mode requires cos τ = 0 on the whole grid")]
    AlgebraicNeedsCosTauZero,

    #[error("ode mode requires cos τ bounded away from 0 on the whole grid")]
    OdeNeedsCosTauNonzero,

    #[error("θ̇ + ℓ vanishes (inflection points near t = {inflections:?})")]
    DivisionBlowUp { inflections: Vec<f64> },

    #[error("Bertrand condition residual {max:e} exceeds {tol:e}")]
    ResidualExceeded { max: f64, tol: f64 },

    #[error("mate chain broken: {0}")]
    ChainViolation(String),
}
