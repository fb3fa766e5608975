use std::fmt;

use crate::scalar::Real;

/// Outcome of a numerical invariant check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Check<T> {
    pub max_residual: T,
    pub tolerance: T,
    pub pass: bool,
}

impl<T: Real> Check<T> {
    /// Passes iff `max_residual <= tolerance` (a NaN residual fails).
    pub fn new(max_residual: T, tolerance: T) -> Self {
        Check {
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }

    /// Combines two checks on the same tolerance scale; passes iff both pass.
    pub fn and(self, other: Check<T>) -> Check<T> {
        Check {
            max_residual: self.max_residual.max(other.max_residual),
            tolerance: self.tolerance.min(other.tolerance),
            pass: self.pass && other.pass,
        }
    }
}

impl<T: Real> fmt::Display for Check<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (max residual {:e}, tolerance {:e})",
            if self.pass { "pass" } else { "FAIL" },
            self.max_residual.to_f64_lossy(),
            self.tolerance.to_f64_lossy()
        )
    }
}
