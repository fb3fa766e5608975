//! Curve arguments: `circle:r=2`, `astroid`, `ellipse:a=3,b=1` or `csv:path`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use frontal_core::curve::{build_builtin, build_sampled, BuiltinSpec, CurveModel};
use frontal_core::legendre::{builtin_legendre, from_regular, LegendreCurve};
use frontal_core::plane::Vec2;

use crate::angle::parse_angle;
use crate::error::{CliError, Context, Result};
use crate::io::read_curve_csv;

#[derive(Clone, Debug, PartialEq)]
pub enum CurveArg {
    Builtin {
        name: String,
        params: BTreeMap<String, f64>,
    },
    Csv(PathBuf),
}

impl FromStr for CurveArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        if name == "csv" {
            if rest.is_empty() {
                return Err("`csv:` needs a path".into());
            }
            return Ok(CurveArg::Csv(PathBuf::from(rest)));
        }
        let mut params = BTreeMap::new();
        for item in rest.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("curve parameter `{item}` is not key=value"))?;
            params.insert(k.trim().to_string(), parse_angle(v)?);
        }
        Ok(CurveArg::Builtin {
            name: name.to_string(),
            params,
        })
    }
}

impl fmt::Display for CurveArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveArg::Csv(p) => write!(f, "csv:{}", p.display()),
            CurveArg::Builtin { name, params } => {
                f.write_str(name)?;
                let mut sep = ':';
                for (k, v) in params {
                    write!(f, "{sep}{k}={v}")?;
                    sep = ',';
                }
                Ok(())
            }
        }
    }
}

/// A loaded input curve. `regular` is the underlying plane curve when the
/// input has no normals.
#[derive(Clone, Debug)]
pub struct LoadedCurve {
    pub legendre: LegendreCurve<f64>,
    pub regular: Option<CurveModel<f64>>,
}

impl CurveArg {
    /// Builds the curve. `samples` sizes the grid of built-in shapes; CSV
    /// input keeps its own grid. `periodic` overrides closure detection for
    /// CSV input.
    pub fn load(&self, samples: usize, periodic: Option<bool>) -> Result<LoadedCurve> {
        match self {
            CurveArg::Builtin { name, params } => {
                let spec = BuiltinSpec::from_params(name, params, samples).context("curve")?;
                Ok(LoadedCurve {
                    legendre: builtin_legendre(&spec).context("curve")?,
                    regular: Some(build_builtin(&spec).context("curve")?),
                })
            }
            CurveArg::Csv(path) => load_csv(path, periodic),
        }
    }
}

/// Closed when the gap from the last sample back to the first is no longer
/// than twice the largest step between samples.
fn looks_closed(points: &[Vec2<f64>]) -> bool {
    let step = points
        .windows(2)
        .map(|w| (w[1] - w[0]).norm())
        .fold(0.0, f64::max);
    let gap = (points[points.len() - 1] - points[0]).norm();
    step > 0.0 && gap <= 2.0 * step
}

fn load_csv(path: &Path, periodic: Option<bool>) -> Result<LoadedCurve> {
    let data = read_curve_csv(path)?;
    let what = format!("curve {}", path.display());
    if data.t.len() < 2 {
        return Err(CliError::Usage(format!("{what}: too few rows")));
    }
    let closed = periodic.unwrap_or_else(|| looks_closed(&data.positions));
    let pairs: Vec<(f64, Vec2<f64>)> = data.t.iter().copied().zip(data.positions.iter().copied()).collect();
    let gamma = build_sampled(&pairs, closed).context(what.clone())?;
    match data.normals {
        None => Ok(LoadedCurve {
            legendre: from_regular(&gamma).context(what)?,
            regular: Some(gamma),
        }),
        Some(normals) => {
            let iv = *gamma.interval();
            let n = iv.n_samples;
            let legendre = LegendreCurve::from_samples(iv, &data.positions[..n], &normals[..n]).context(what)?;
            Ok(LoadedCurve {
                legendre,
                regular: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        let c: CurveArg = "circle:r=2,cx=pi".parse().unwrap();
        match &c {
            CurveArg::Builtin { name, params } => {
                assert_eq!(name, "circle");
                assert_eq!(params["r"], 2.0);
                assert_eq!(params["cx"], std::f64::consts::PI);
            }
            _ => panic!(),
        }
        assert_eq!(c.to_string(), format!("circle:cx={},r=2", std::f64::consts::PI));
        assert_eq!("astroid".parse::<CurveArg>().unwrap().to_string(), "astroid");
        assert_eq!("csv:a/b.csv".parse::<CurveArg>().unwrap(), CurveArg::Csv("a/b.csv".into()));
        assert!("csv:".parse::<CurveArg>().is_err());
        assert!("circle:r".parse::<CurveArg>().is_err());
    }

    #[test]
    fn unknown_shape_fails_on_load() {
        let c: CurveArg = "heart".parse().unwrap();
        assert!(matches!(c.load(64, None), Err(CliError::Core { .. })));
    }
}
