use std::path::Path;
use std::time::Instant;

use frontal_core::bertrand::{
    build_mate, check_regular_bertrand, inverse_mate, round_trip_error, solve_lambda, verify_mate_curvature,
    LambdaSolution, MateConfig, MatePair, SpecialOp,
};
use frontal_core::check::Check;
use frontal_core::legendre::{
    check_ell_kappa_relation, classify_singularities, frenet_check, inflection_points, legendre_curvature,
    reconstruction_check, CuspKind, CurvaturePair, LegendreCurve,
};
use frontal_core::plane::AngleFn;
use frontal_core::Error as CoreError;

use crate::error::{CliError, Context, Result};
use crate::io::{write_columns, write_curvature_csv, write_mate_csv};
use crate::job::{Command, JobSpec, OperatorSpec};
use crate::report::{CheckEntry, CuspEntry, RunReport};
use crate::svg::{render_svg, Polyline};

/// The mate configuration a command stands for, if any.
fn mate_config(op: &OperatorSpec) -> Option<MateConfig<f64>> {
    let (th, ta, l0) = (op.theta.unwrap_or(0.0), op.tau.unwrap_or(0.0), op.lambda0);
    let special = match op.name {
        Command::Evolute => SpecialOp::Evolute,
        Command::Involute => SpecialOp::Involute { lambda0: l0 },
        Command::Parallel => SpecialOp::Parallel { distance: l0 },
        Command::Evolutoid => SpecialOp::Evolutoid { theta: th },
        Command::Involutoid => SpecialOp::Involutoid { tau: ta, lambda0: l0 },
        Command::Nvolute => SpecialOp::N { theta: th, lambda0: l0 },
        Command::Tvolute => SpecialOp::T { tau: ta, lambda0: l0 },
        Command::Mate | Command::Roundtrip => return Some(MateConfig::new(
            AngleFn::constant(th),
            AngleFn::constant(ta),
            l0,
            op.mode,
        )),
        Command::Plot if op.theta.is_some() => {
            return Some(MateConfig::new(AngleFn::constant(th), AngleFn::constant(ta), l0, op.mode))
        }
        _ => return None,
    };
    let mut cfg = special.config();
    cfg.mode = op.mode;
    Some(cfg)
}

fn mean_abs(v: &[f64]) -> f64 {
    if v.is_empty() {
        0.0
    } else {
        v.iter().map(|x| x.abs()).sum::<f64>() / v.len() as f64
    }
}

fn residual_entry(lam: &LambdaSolution<f64>) -> CheckEntry {
    CheckEntry {
        mean_residual: Some(mean_abs(&lam.residual)),
        ..Check::new(lam.max_residual(), lam.ode_tol).into()
    }
}

fn polyline(label: &str, lc: &LegendreCurve<f64>, markers: Vec<(f64, f64)>) -> Polyline {
    Polyline {
        label: label.to_string(),
        points: lc.grid().into_iter().map(|t| lc.position(t)).map(|p| (p.x, p.y)).collect(),
        closed: lc.interval().periodic,
        markers,
    }
}

fn write_svg(path: &Path, curves: &[Polyline]) -> Result<()> {
    let doc = render_svg(curves)?;
    std::fs::write(path, doc).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn add_mate_checks(report: &mut RunReport, mp: &MatePair<f64>) {
    report.add_check("distance_equation", residual_entry(&mp.lambda));
    report.add_check("direction", mp.direction_check());
    report.add_check("position", mp.position_check());
    report.add_check("mate_tangency", mp.tangency_check());
    report.add_check("curvature_cross", verify_mate_curvature(mp));
    if mp.lambda_vanishes {
        report.advisories.push("λ vanishes: the mate coincides with the source".into());
    }
    if mp.lambda.lambda0_ignored {
        report.advisories.push("lambda0 is ignored in algebraic mode".into());
    }
    if mp.lambda.refined {
        report.advisories.push("the distance equation was re-solved with half steps".into());
    }
    if mp.source.interval().periodic && !mp.mate.interval().periodic {
        report.advisories.push("the mate does not close".into());
    }
}

/// Runs the pipeline for `job`, writes the requested outputs and returns the
/// report. The caller decides the exit status from [`RunReport::all_pass`].
pub fn run_job(job: &JobSpec) -> Result<RunReport> {
    let start = Instant::now();
    let op = &job.operator;
    let cmd = op.name;
    let loaded = job.curve.load(job.n_samples, job.periodic)?;
    let lc = &loaded.legendre;
    let mut report = RunReport {
        command: cmd.name().to_string(),
        curve: job.curve.to_string(),
        ..RunReport::default()
    };
    let ctx = |step: &str| format!("{} of {}: {step}", cmd.name(), job.curve);
    report.add_check("source_tangency", lc.tangency_check());

    if cmd == Command::CheckRegular {
        run_check_regular(job, &loaded, &mut report)?;
        report.wall_time_s = start.elapsed().as_secs_f64();
        if let Some(p) = &job.outputs.report {
            report.write_json(p)?;
        }
        return Ok(report);
    }

    let cp = legendre_curvature(lc).context(ctx("curvature"))?;
    let cusps: Vec<_> = classify_singularities(&cp)
        .into_iter()
        .filter(|c| c.kind != CuspKind::Regular)
        .collect();
    report.cusps = cusps.iter().map(CuspEntry::from).collect();
    report.inflections = inflection_points(&cp);
    let markers: Vec<(f64, f64)> = cusps
        .iter()
        .map(|c| lc.position(c.t0))
        .map(|p| (p.x, p.y))
        .collect();

    match cmd {
        Command::Curvature | Command::Cusps => {
            source_checks(lc, &cp, &mut report);
            if let Some(p) = &job.outputs.csv {
                if cmd == Command::Curvature {
                    write_curvature_csv(p, &cp)?;
                } else {
                    let t0: Vec<f64> = cusps.iter().map(|c| c.t0).collect();
                    let kind: Vec<f64> = cusps.iter().map(|c| kind_code(c.kind)).collect();
                    write_columns(p, &["t0", "kind_code"], &[&t0, &kind])?;
                }
            }
            if let Some(p) = &job.outputs.svg {
                write_svg(p, &[polyline(&job.curve.to_string(), lc, markers)])?;
            }
        }
        _ => {
            let mut curves = vec![polyline(&job.curve.to_string(), lc, markers)];
            if let Some(cfg) = mate_config(op) {
                let lam = solve_lambda(&cp, &cfg).context(ctx("distance"))?;
                let mp = build_mate(lc, &cfg, &lam).context(ctx("mate"))?;
                add_mate_checks(&mut report, &mp);
                curves.push(polyline(cmd.name(), &mp.mate, Vec::new()));
                let mut csv_pair = mp.clone();
                if cmd == Command::Roundtrip {
                    let rt = round_trip_error(&mp).context(ctx("inverse"))?;
                    report.add_check("round_trip_position", Check::new(rt.position, mp.mate_tol));
                    report.add_check("round_trip_normal", Check::new(rt.normal, mp.direction_tol()));
                    csv_pair = inverse_mate(&mp).context(ctx("inverse"))?;
                }
                if let Some(p) = &job.outputs.csv {
                    write_mate_csv(p, &csv_pair)?;
                }
            } else if job.outputs.csv.is_some() {
                return Err(CliError::Usage("plot without a mate has no CSV output".into()));
            }
            if let Some(p) = &job.outputs.svg {
                write_svg(p, &curves)?;
            }
        }
    }
    report.wall_time_s = start.elapsed().as_secs_f64();
    if let Some(p) = &job.outputs.report {
        report.write_json(p)?;
    }
    Ok(report)
}

/// Numeric code of a singular type in the cusp CSV: `32`, `52`, `43`, `53`,
/// `0` when inconclusive.
pub fn kind_code(kind: CuspKind) -> f64 {
    match kind {
        CuspKind::Cusp32 => 32.0,
        CuspKind::Cusp52 => 52.0,
        CuspKind::Cusp43 => 43.0,
        CuspKind::Cusp53 => 53.0,
        CuspKind::Regular | CuspKind::Inconclusive => 0.0,
    }
}

fn source_checks(lc: &LegendreCurve<f64>, cp: &CurvaturePair<f64>, report: &mut RunReport) {
    report.add_check("reconstruction", reconstruction_check(lc, cp));
    report.add_check("frenet", frenet_check(lc, cp));
    match check_ell_kappa_relation(lc) {
        Ok(c) => report.add_check("ell_kappa", c),
        Err(_) => report.advisories.push("no regular points: ℓ = κ|β| not checked".into()),
    }
}

fn run_check_regular(job: &JobSpec, loaded: &crate::source::LoadedCurve, report: &mut RunReport) -> Result<()> {
    let op = &job.operator;
    let curve = loaded.regular.as_ref().ok_or_else(|| {
        CliError::Usage("check-regular needs a curve without normals (built-in or t,x,y CSV)".into())
    })?;
    let (theta, tau) = (op.theta.unwrap_or(0.0), op.tau.unwrap_or(0.0));
    let rep = check_regular_bertrand(
        curve,
        &AngleFn::constant(theta),
        &AngleFn::constant(tau),
        &AngleFn::constant(op.lambda0),
    )
    .map_err(|source| match source {
        CoreError::Singular { .. } => CliError::Core {
            context: format!("check-regular of {}: the curve is not regular", job.curve),
            source,
        },
        source => CliError::Core {
            context: format!("check-regular of {}", job.curve),
            source,
        },
    })?;
    report.add_check(
        "cond1",
        CheckEntry {
            mean_residual: Some(mean_abs(&rep.cond1_residual)),
            ..Check::new(rep.max_cond1(), rep.ode_tol).into()
        },
    );
    let min2 = rep.min_abs_cond2();
    report.add_check(
        "cond2_nonzero",
        CheckEntry {
            max_residual: rep.reg_tol,
            mean_residual: None,
            tolerance: min2,
            pass: min2 > rep.reg_tol,
        },
    );
    report.values.insert("min_abs_cond2".into(), min2);
    report.values.insert(
        "max_abs_cond2".into(),
        rep.cond2_value.iter().fold(0.0, |m: f64, c| m.max(c.abs())),
    );
    if rep.is_mate {
        let (lo, hi) = rep
            .mate_curvature
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &k| (a.min(k), b.max(k)));
        report.values.insert("kappa_bar_min".into(), lo);
        report.values.insert("kappa_bar_max".into(), hi);
    }
    if let Some(p) = &job.outputs.csv {
        if rep.is_mate {
            write_columns(
                p,
                &["s", "cond1", "cond2", "kappa_bar"],
                &[&rep.grid, &rep.cond1_residual, &rep.cond2_value, &rep.mate_curvature],
            )?;
        } else {
            write_columns(p, &["s", "cond1", "cond2"], &[&rep.grid, &rep.cond1_residual, &rep.cond2_value])?;
        }
    }
    if job.outputs.svg.is_some() {
        report.advisories.push("check-regular writes no SVG".into());
    }
    Ok(())
}
