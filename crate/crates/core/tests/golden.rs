//! Frozen reference values, evaluated independently from the closed forms.

use frontal_core::bertrand::{special_operator, SpecialOp};
use frontal_core::curve::{build_builtin, BuiltinSpec};
use frontal_core::legendre::{builtin_legendre, from_regular, legendre_curvature};
use frontal_core::plane::Vec2;
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

fn spec(name: &str, params: &[(&str, f64)], n: usize) -> BuiltinSpec<f64> {
    let p: BTreeMap<String, f64> = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    BuiltinSpec::from_params(name, &p, n).unwrap()
}

#[test]
fn ellipse_curvature_from_unit_tangent() {
    let lc = from_regular(&build_builtin(&spec("ellipse", &[], 1024)).unwrap()).unwrap();
    let cp = legendre_curvature(&lc).unwrap();
    for (t, ell, beta) in [
        (0.3, 1.5847903516087696, -1.1233862103637744),
        (1.1, 0.5912346490754242, -1.839225836019878),
        (2.5, 0.9640846081518946, -1.4403147995508345),
        (4.0, 0.7357674837439832, -1.648711633583302),
    ] {
        assert!((cp.ell_at(t) - ell).abs() < 1e-8, "ℓ({t})");
        assert!((cp.beta_at(t) - beta).abs() < 1e-8, "β({t})");
    }
}

#[test]
fn astroid_evolutoid_positions() {
    let lc = builtin_legendre(&spec("astroid", &[], 1024)).unwrap();
    let mp = special_operator(&lc, SpecialOp::Evolutoid { theta: FRAC_PI_6 }).unwrap();
    for (t, x, y) in [
        (0.4, 0.6664998677648655, 0.9838179881222476),
        (2.2, -1.4330983362753151, 0.6587897754216406),
        (5.1, 0.9547710133337507, -0.6702917031984599),
    ] {
        assert!((mp.mate.position(t) - Vec2::new(x, y)).norm() < 1e-8, "t = {t}");
    }
}

#[test]
fn astroid_n_pi_3_positions() {
    let lam0 = 0.7994080650317896;
    let lc = builtin_legendre(&spec("astroid", &[], 1024)).unwrap();
    let mp = special_operator(&lc, SpecialOp::N { theta: FRAC_PI_3, lambda0: lam0 }).unwrap();
    for (t, x, y) in [
        (0.0, 0.3076923076923076, 0.3997040325158949),
        (1.0, 0.16352388262251763, 0.47312675379016933),
        (3.0, -0.3178690494830789, -0.2592884494488059),
    ] {
        assert!((mp.mate.position(t) - Vec2::new(x, y)).norm() < 1e-8, "t = {t}");
    }
}

#[test]
fn circle_involutoid_distance() {
    let lc = builtin_legendre(&spec("circle", &[("r", 1.5)], 1024)).unwrap();
    let op = SpecialOp::Involutoid { tau: FRAC_PI_4, lambda0: 1.6000000000000003 };
    let mp = special_operator(&lc, op).unwrap();
    let grid = mp.lambda.grid.clone();
    let at = |t: f64| {
        let i = grid.iter().position(|&s| (s - t).abs() < 1e-12).unwrap();
        mp.lambda.lambda[i]
    };
    assert!((at(0.0) - 1.6000000000000003).abs() < 1e-15);
    // t = 2.0 and 6.0 are not nodes; compare on the nearest node instead
    let h = grid[1] - grid[0];
    for (t, rel) in [(2.0f64, 1e-6), (6.0, 1e-6)] {
        let k = (t / h).round();
        let s = k * h;
        let exact = 1.5 + 0.1 * s.exp();
        let got = at(s);
        assert!((got - exact).abs() / exact < rel, "t = {t}");
    }
}
