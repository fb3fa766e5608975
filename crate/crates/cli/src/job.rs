//! Command line and job file parsing.
//!
//! Flags override the job file, which overrides the defaults
//! (`n_samples = 1024`, `lambda0 = 0`, `mode = auto`).

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use frontal_core::bertrand::{SolveMode, ANGLE_TOL};
use frontal_core::curve::DEFAULT_SAMPLES;
use serde::{Deserialize, Serialize};

use crate::angle::parse_angle;
use crate::error::{CliError, Result};
use crate::source::CurveArg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Curvature (ℓ, β) of the curve, its singular and inflection points.
    Curvature,
    /// Mate for given angles: --theta, --tau, --lambda0.
    Mate,
    /// Evolute (θ = 0, τ = π/2).
    Evolute,
    /// Involute (θ = π/2, τ = 0) starting at --lambda0.
    Involute,
    /// Parallel curve at distance --lambda0.
    Parallel,
    /// Evolutoid for angle --theta.
    Evolutoid,
    /// Involutoid for angle --tau starting at --lambda0.
    Involutoid,
    /// N[θ] mate for angle --theta.
    Nvolute,
    /// T[τ] mate for angle --tau.
    Tvolute,
    /// Singular points and their types.
    Cusps,
    /// Mate followed by its inverse; reports how well the source comes back.
    Roundtrip,
    /// Mate test for a regular curve in arc length (constant --lambda0).
    CheckRegular,
    /// SVG of the curve, with its mate when --theta and --tau are given.
    Plot,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Curvature => "curvature",
            Command::Mate => "mate",
            Command::Evolute => "evolute",
            Command::Involute => "involute",
            Command::Parallel => "parallel",
            Command::Evolutoid => "evolutoid",
            Command::Involutoid => "involutoid",
            Command::Nvolute => "nvolute",
            Command::Tvolute => "tvolute",
            Command::Cusps => "cusps",
            Command::Roundtrip => "roundtrip",
            Command::CheckRegular => "check-regular",
            Command::Plot => "plot",
        }
    }

    /// Which of `(θ, τ)` the command needs; `None` means optional as a pair.
    fn angles(self) -> Option<(bool, bool)> {
        match self {
            Command::Mate | Command::Roundtrip | Command::CheckRegular => Some((true, true)),
            Command::Evolutoid | Command::Nvolute => Some((true, false)),
            Command::Involutoid | Command::Tvolute => Some((false, true)),
            Command::Plot => None,
            _ => Some((false, false)),
        }
    }

    fn uses_lambda(self) -> bool {
        !matches!(
            self,
            Command::Curvature | Command::Cusps | Command::Evolute | Command::Evolutoid
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSpec {
    pub name: Command,
    pub theta: Option<f64>,
    pub tau: Option<f64>,
    pub lambda0: f64,
    pub mode: SolveMode,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    pub csv: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub report: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub curve: CurveArg,
    pub operator: OperatorSpec,
    pub outputs: Outputs,
    pub n_samples: usize,
    /// Closure of CSV input; detected from the data when `None`.
    pub periodic: Option<bool>,
}

/// Angles in a job file may be numbers or literals such as `"pi/2"`.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(untagged)]
enum AngleValue {
    Number(f64),
    Text(String),
}

impl AngleValue {
    fn value(&self) -> std::result::Result<f64, String> {
        match self {
            AngleValue::Number(v) => Ok(*v),
            AngleValue::Text(s) => parse_angle(s),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorFile {
    name: Option<Command>,
    theta: Option<AngleValue>,
    tau: Option<AngleValue>,
    lambda0: Option<f64>,
    mode: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobFile {
    curve: Option<String>,
    #[serde(default)]
    operator: OperatorFile,
    #[serde(default)]
    outputs: Outputs,
    n_samples: Option<usize>,
    periodic: Option<bool>,
}

#[derive(Debug, Parser)]
#[command(name = "frontal", version, about = "Curvature, singular points and Bertrand-type mates of plane fronts")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    /// Curve: `circle:r=1`, `ellipse:a=2,b=1`, `astroid`, `line`, or `csv:path`.
    #[arg(long, global = true)]
    curve: Option<String>,
    /// Angle θ between ν and the offset direction (`pi/2`, `0.3`, ...).
    #[arg(long, global = true, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Angle τ between the mate normal and the offset direction.
    #[arg(long, global = true, allow_hyphen_values = true)]
    tau: Option<String>,
    /// Initial distance λ(t_start); the distance itself for `parallel`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda0: Option<f64>,
    /// How λ is solved: ode, algebraic or auto.
    #[arg(long, global = true)]
    mode: Option<String>,
    /// Grid size for built-in curves.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Treat CSV input as closed (or not) instead of detecting it.
    #[arg(long, global = true)]
    periodic: Option<bool>,
    /// Output CSV.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output SVG.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Output JSON report.
    #[arg(long, global = true)]
    json_report: Option<PathBuf>,
    /// JSON job file with fields curve, operator, outputs, n_samples.
    #[arg(long, global = true)]
    job: Option<PathBuf>,
}

fn read_job_file(path: &Path) -> Result<JobFile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn angle(flag: Option<&str>, file: Option<&AngleValue>, what: &str) -> Result<Option<f64>> {
    let parsed = match (flag, file) {
        (Some(s), _) => Some(parse_angle(s)),
        (None, Some(v)) => Some(v.value()),
        (None, None) => None,
    };
    parsed
        .transpose()
        .map_err(|e| CliError::Usage(format!("--{what}: {e}")))
}

/// Parses a full command line (program name first) into a validated job.
pub fn parse_job<I, S>(args: I) -> Result<JobSpec>
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let file = match &cli.job {
        Some(p) => read_job_file(p)?,
        None => JobFile::default(),
    };
    let name = cli
        .command
        .or(file.operator.name)
        .ok_or_else(|| CliError::Usage("no command given (e.g. `frontal curvature --curve circle`)".into()))?;
    let curve: CurveArg = cli
        .curve
        .or(file.curve)
        .ok_or_else(|| CliError::Usage("missing --curve".into()))?
        .parse()
        .map_err(|e: String| CliError::Usage(format!("--curve: {e}")))?;
    let mode = match cli.mode.or(file.operator.mode) {
        Some(m) => m
            .parse::<SolveMode>()
            .map_err(|e| CliError::Usage(format!("--mode: {e}")))?,
        None => SolveMode::Auto,
    };
    let operator = OperatorSpec {
        name,
        theta: angle(cli.theta.as_deref(), file.operator.theta.as_ref(), "theta")?,
        tau: angle(cli.tau.as_deref(), file.operator.tau.as_ref(), "tau")?,
        lambda0: cli.lambda0.or(file.operator.lambda0).unwrap_or(0.0),
        mode,
    };
    let lambda_given = cli.lambda0.is_some() || file.operator.lambda0.is_some();
    validate(&operator, lambda_given)?;
    let outputs = Outputs {
        csv: cli.out.or(file.outputs.csv),
        svg: cli.svg.or(file.outputs.svg),
        report: cli.json_report.or(file.outputs.report),
    };
    if name == Command::Plot && outputs.svg.is_none() {
        return Err(CliError::Usage("plot needs --svg".into()));
    }
    Ok(JobSpec {
        curve,
        operator,
        outputs,
        n_samples: cli.samples.or(file.n_samples).unwrap_or(DEFAULT_SAMPLES),
        periodic: cli.periodic.or(file.periodic),
    })
}

fn validate(op: &OperatorSpec, lambda_given: bool) -> Result<()> {
    let cmd = op.name.name();
    let check = |given: bool, needed: bool, flag: &str| match (given, needed) {
        (false, true) => Err(CliError::Usage(format!("{cmd} needs --{flag}"))),
        (true, false) => Err(CliError::Usage(format!("{cmd} does not take --{flag}"))),
        _ => Ok(()),
    };
    match op.name.angles() {
        Some((th, ta)) => {
            check(op.theta.is_some(), th, "theta")?;
            check(op.tau.is_some(), ta, "tau")?;
        }
        None => {
            if op.theta.is_some() != op.tau.is_some() {
                return Err(CliError::Usage(format!("{cmd} takes --theta and --tau together")));
            }
        }
    }
    if lambda_given && !op.name.uses_lambda() {
        return Err(CliError::Usage(format!("{cmd} does not take --lambda0")));
    }
    if op.name == Command::CheckRegular && op.mode != SolveMode::Auto {
        return Err(CliError::Usage("check-regular does not take --mode".into()));
    }
    // the mode must fit the constant τ of the operator
    let tau = match op.name {
        Command::Evolute | Command::Evolutoid => Some(std::f64::consts::FRAC_PI_2),
        Command::Involute | Command::Parallel => Some(0.0),
        Command::Nvolute => op.theta.map(|t| t + std::f64::consts::FRAC_PI_2),
        _ => op.tau,
    };
    if let Some(tau) = tau {
        let zero = tau.cos().abs() <= ANGLE_TOL;
        match op.mode {
            SolveMode::Algebraic if !zero => {
                return Err(CliError::Usage(format!(
                    "--mode algebraic needs cos τ = 0, got cos τ = {:e}",
                    tau.cos()
                )))
            }
            SolveMode::Ode if zero => {
                return Err(CliError::Usage("--mode ode needs cos τ ≠ 0".into()));
            }
            _ => {}
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn parse(line: &str) -> Result<JobSpec> {
        parse_job(std::iter::once("frontal").chain(line.split_whitespace()))
    }

    #[test]
    fn curvature_job() {
        let job = parse("curvature --curve circle:r=1").unwrap();
        assert_eq!(job.operator.name, Command::Curvature);
        assert_eq!(job.n_samples, 1024);
        assert_eq!(job.operator.mode, SolveMode::Auto);
        assert_eq!(job.operator.lambda0, 0.0);
    }

    #[test]
    fn involute_parameters_through_mate() {
        let job = parse("mate --curve astroid --theta pi/2 --tau 0 --lambda0 0.75").unwrap();
        assert_eq!(job.operator.theta, Some(FRAC_PI_2));
        assert_eq!(job.operator.tau, Some(0.0));
        assert_eq!(job.operator.lambda0, 0.75);
    }

    #[test]
    fn mode_must_fit_tau() {
        let e = parse("mate --curve circle:r=1 --tau pi/3 --theta pi/2 --mode algebraic").unwrap_err();
        assert!(e.to_string().contains("algebraic"), "{e}");
        assert!(parse("evolute --curve circle --mode ode").is_err());
        assert!(parse("evolute --curve circle --mode algebraic").is_ok());
    }

    #[test]
    fn missing_and_extra_parameters() {
        assert!(parse("mate --curve circle --theta 0").is_err());
        assert!(parse("evolute --curve circle --theta 0").is_err());
        assert!(parse("evolute --curve circle --lambda0 1").is_err());
        assert!(parse("evolutoid --curve circle").is_err());
        assert!(parse("plot --curve circle").is_err());
        assert!(parse("plot --curve circle --svg a.svg --theta 0").is_err());
        assert!(parse("frobnicate --curve circle").is_err());
        assert!(parse("curvature").is_err());
        assert!(parse("mate --curve circle --theta nope --tau 0").is_err());
    }

    #[test]
    fn negative_values() {
        let job = parse("tvolute --curve astroid --tau -pi/2 --lambda0 -0.5").unwrap();
        assert_eq!(job.operator.tau, Some(-FRAC_PI_2));
        assert_eq!(job.operator.lambda0, -0.5);
    }

    #[test]
    fn job_file_precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("job.json");
        std::fs::write(
            &path,
            r#"{"curve": "circle:r=2", "operator": {"name": "involute", "lambda0": 1.5},
                "outputs": {"csv": "a.csv"}, "n_samples": 256}"#,
        )
        .unwrap();
        let p = path.to_str().unwrap();
        let job = parse(&format!("--job {p}")).unwrap();
        assert_eq!(job.operator.name, Command::Involute);
        assert_eq!(job.operator.lambda0, 1.5);
        assert_eq!(job.n_samples, 256);
        assert_eq!(job.outputs.csv, Some(PathBuf::from("a.csv")));
        let job = parse(&format!("involute --job {p} --lambda0 -1 --samples 512 --out b.csv")).unwrap();
        assert_eq!(job.operator.lambda0, -1.0);
        assert_eq!(job.n_samples, 512);
        assert_eq!(job.outputs.csv, Some(PathBuf::from("b.csv")));
        assert_eq!(job.curve.to_string(), "circle:r=2");

        std::fs::write(&path, r#"{"curve": "astroid", "operator": {"name": "evolutoid", "theta": "pi/2"}}"#).unwrap();
        assert_eq!(parse(&format!("--job {p}")).unwrap().operator.theta, Some(FRAC_PI_2));
        std::fs::write(&path, r#"{"curve": "astroid", "bogus": 1}"#).unwrap();
        assert!(matches!(parse(&format!("curvature --job {p}")), Err(CliError::Json { .. })));
    }
}
