use std::collections::BTreeMap;
use std::path::Path;

use frontal_core::check::Check;
use frontal_core::legendre::CuspReport;
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

impl From<Check<f64>> for CheckEntry {
    fn from(c: Check<f64>) -> Self {
        CheckEntry {
            max_residual: c.max_residual,
            mean_residual: None,
            tolerance: c.tolerance,
            pass: c.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CuspEntry {
    pub t0: f64,
    pub kind: String,
}

impl From<&CuspReport<f64>> for CuspEntry {
    fn from(r: &CuspReport<f64>) -> Self {
        CuspEntry {
            t0: r.t0,
            kind: r.kind.as_str().to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub curve: String,
    pub checks: BTreeMap<String, CheckEntry>,
    pub cusps: Vec<CuspEntry>,
    pub inflections: Vec<f64>,
    /// Named scalar results, e.g. `min_abs_cond2`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub advisories: Vec<String>,
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn add_check(&mut self, name: &str, entry: impl Into<CheckEntry>) {
        self.checks.insert(name.to_string(), entry.into());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n").map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    /// One line per check, then cusps and advisories.
    pub fn summary(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.curve);
        for (name, c) in &self.checks {
            out += &format!(
                "  {:<22} {}  max {:.3e}  tol {:.3e}\n",
                name,
                if c.pass { "pass" } else { "FAIL" },
                c.max_residual,
                c.tolerance
            );
        }
        for (k, v) in &self.values {
            out += &format!("  {k:<22} {v:.6e}\n");
        }
        if !self.cusps.is_empty() {
            out += &format!("  {} singular point(s):", self.cusps.len());
            for c in &self.cusps {
                out += &format!(" {}@{:.6}", c.kind, c.t0);
            }
            out.push('\n');
        }
        for a in &self.advisories {
            out += &format!("  note: {a}\n");
        }
        out
    }
}
