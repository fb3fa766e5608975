use std::path::Path;
use std::process::{Command, Output};

use frontal_cli::io::{read_curve_csv, write_legendre_csv};
use frontal_cli::{parse_job, run_job};
use frontal_core::curve::BuiltinSpec;
use frontal_core::legendre::builtin_legendre;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn frontal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frontal")).args(args).output().unwrap()
}

fn read_rows(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut rdr = csv::Reader::from_path(path).unwrap();
    let header = rdr.headers().unwrap().iter().map(str::to_string).collect();
    let rows = rdr
        .records()
        .map(|r| r.unwrap().iter().map(|f| f.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn circle_evolute_csv_is_the_origin() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ev.csv");
    let o = frontal(&["evolute", "--curve", "circle:r=1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (header, rows) = read_rows(&out);
    assert_eq!(header, ["t", "x", "y", "nx", "ny", "lambda", "ell_bar", "beta_bar"]);
    assert_eq!(rows.len(), 1024);
    for r in rows {
        assert!(r[1].abs() <= 1e-8 && r[2].abs() <= 1e-8);
    }
}

#[test]
fn astroid_cusp_report() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("r.json");
    let o = frontal(&["cusps", "--curve", "astroid", "--json-report", rep.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    let cusps = v["cusps"].as_array().unwrap();
    assert_eq!(cusps.len(), 4);
    assert!(cusps.iter().all(|c| c["kind"] == "cusp_3_2"));
    assert!(v["checks"].as_object().unwrap().values().all(|c| c["pass"] == true));
    assert!(v["inflections"].as_array().unwrap().is_empty());
}

#[test]
fn round_trip_job_reports_small_error() {
    let job = parse_job(["frontal", "roundtrip", "--curve", "astroid", "--theta", "0", "--tau", "pi/2"]).unwrap();
    let report = run_job(&job).unwrap();
    let c = &report.checks["round_trip_position"];
    assert!(c.pass && c.max_residual <= 1e-6);
    assert!(report.all_pass());
}

#[test]
fn failed_check_gives_nonzero_exit() {
    // no regular mate: condition (1) fails on a circle with θ = τ = 0
    let o = frontal(&["check-regular", "--curve", "circle:r=1", "--theta", "0", "--tau", "0", "--lambda0", "0.3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = frontal(&["check-regular", "--curve", "circle:r=2", "--theta", "pi/2", "--tau", "pi/2", "--lambda0", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_and_core_errors_exit_with_two() {
    let o = frontal(&["mate", "--curve", "circle:r=1", "--tau", "pi/3", "--theta", "pi/2", "--mode", "algebraic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("algebraic"));
    let o = frontal(&["evolute", "--curve", "line"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("evolute of line"));
    let o = frontal(&["check-regular", "--curve", "astroid", "--theta", "0", "--tau", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = frontal(&["curvature", "--curve", "csv:/nonexistent/file.csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(frontal(&["--help"]).status.success());
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |k: usize| {
        let (csv, svg) = (dir.path().join(format!("{k}.csv")), dir.path().join(format!("{k}.svg")));
        let o = frontal(&[
            "nvolute",
            "--curve",
            "astroid",
            "--theta",
            "pi/3",
            "--samples",
            "512",
            "--out",
            csv.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        (std::fs::read(csv).unwrap(), std::fs::read(svg).unwrap())
    };
    assert_eq!(run(0), run(1));
}

#[test]
fn astroid_and_evolute_plot() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p.svg");
    let o = frontal(&["plot", "--curve", "astroid", "--theta", "0", "--tau", "pi/2", "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let s = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(s.matches("<path").count(), 2);
    assert_eq!(s.matches(r#"class="marker""#).count(), 4);

    let o = frontal(&["evolute", "--curve", "circle", "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let s = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(s.matches("<path").count(), 1);
    assert_eq!(s.matches(r#"class="point""#).count(), 1);
}

#[test]
fn csv_round_trip_is_lossless() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..5 {
        let mut p = std::collections::BTreeMap::new();
        p.insert("r".to_string(), rng.gen_range(0.1..10.0));
        p.insert("cx".to_string(), rng.gen_range(-5.0..5.0));
        let lc = builtin_legendre(&BuiltinSpec::from_params("circle", &p, 300).unwrap()).unwrap();
        let path = dir.path().join(format!("c{k}.csv"));
        write_legendre_csv(&path, &lc).unwrap();
        let data = read_curve_csv(&path).unwrap();
        for (i, t) in lc.grid().into_iter().enumerate() {
            assert_eq!(data.t[i], t);
            assert_eq!(data.positions[i], lc.position(t));
        }
        // and through the CLI as a Legendre input
        let o = frontal(&["curvature", "--curve", &format!("csv:{}", path.display())]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn sampled_plane_curve_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ellipse.csv");
    let n = 512;
    let mut text = String::from("t,x,y\n");
    for i in 0..n {
        let t = std::f64::consts::TAU * i as f64 / n as f64;
        text += &format!("{t:?},{:?},{:?}\n", 2.0 * t.cos(), t.sin());
    }
    std::fs::write(&path, text).unwrap();
    let rep = dir.path().join("r.json");
    let o = frontal(&[
        "parallel",
        "--curve",
        &format!("csv:{}", path.display()),
        "--lambda0",
        "0.1",
        "--json-report",
        rep.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert!(v["advisories"].is_null());

    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "a,b\n1,2\n").unwrap();
    let o = frontal(&["curvature", "--curve", &format!("csv:{}", bad.display())]);
    assert_eq!(o.status.code(), Some(2));
}
