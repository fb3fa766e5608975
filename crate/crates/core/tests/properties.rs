mod common;

use common::SupportFront;
use frontal_core::bertrand::{build_mate, compose_mates, solve_lambda, verify_mate_curvature, Composition, MateConfig};
use frontal_core::legendre::{check_ell_kappa_relation, legendre_curvature, LegendreCurve};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

const CASES: u64 = 120;
const N: usize = 1024;

fn random_config(rng: &mut ChaCha8Rng, theta: Option<f64>) -> MateConfig<f64> {
    let theta = theta.unwrap_or_else(|| rng.gen_range(-PI..PI));
    let tau = if rng.gen_bool(0.2) {
        FRAC_PI_2
    } else {
        rng.gen_range(-FRAC_PI_4..FRAC_PI_4)
    };
    MateConfig::constant(theta, tau, rng.gen_range(-0.5..0.5))
}

fn mate(src: &LegendreCurve<f64>, cfg: &MateConfig<f64>) -> frontal_core::MatePair {
    let cp = legendre_curvature(src).unwrap();
    let lam = solve_lambda(&cp, cfg).unwrap();
    build_mate(src, cfg, &lam).unwrap()
}

/// Runs `f` on every seed and reports all failing seeds at once.
fn for_all(f: impl Fn(u64) -> Result<(), String>) {
    let failures: Vec<String> = (0..CASES)
        .filter_map(|seed| f(seed).err().map(|e| format!("seed {seed}: {e}")))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn curvature_matches_support_function() {
    for_all(|seed| {
        let front = SupportFront::random(seed);
        let cp = legendre_curvature(&front.legendre(N)).map_err(|e| e.to_string())?;
        for (i, &t) in cp.grid.iter().enumerate() {
            let (l, b) = front.curvature(t);
            if (cp.ell[i] - l).abs() > 1e-10 || (cp.beta[i] - b).abs() > 1e-10 {
                return Err(format!("t = {t}: ({}, {}) vs ({l}, {b})", cp.ell[i], cp.beta[i]));
            }
        }
        Ok(())
    });
}

#[test]
fn tangency_holds() {
    for_all(|seed| {
        let lc = SupportFront::random(seed).legendre(N);
        let c = lc.tangency_check();
        c.pass.then_some(()).ok_or(c.to_string())
    });
}

#[test]
fn ell_is_kappa_times_speed() {
    for_all(|seed| {
        let lc = SupportFront::random(seed).legendre(N);
        let c = check_ell_kappa_relation(&lc).map_err(|e| e.to_string())?;
        c.pass.then_some(()).ok_or(c.to_string())
    });
}

#[test]
fn flipping_the_normal_negates_beta() {
    for_all(|seed| {
        let lc = SupportFront::random(seed).legendre(N);
        let a = legendre_curvature(&lc).unwrap();
        let b = legendre_curvature(&lc.negated_normal()).unwrap();
        let scale = a.max_abs_beta().max(1.0);
        for i in 0..a.len() {
            if (a.ell[i] - b.ell[i]).abs() > 1e-12 * scale || (a.beta[i] + b.beta[i]).abs() > 1e-12 * scale {
                return Err(format!("node {i}"));
            }
        }
        Ok(())
    });
}

#[test]
fn mates_are_fronts_with_coinciding_directions() {
    for_all(|seed| {
        let lc = SupportFront::random(seed).legendre(N);
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let mp = mate(&lc, &random_config(&mut rng, None));
        for (name, c) in [
            ("direction", mp.direction_check()),
            ("position", mp.position_check()),
            ("tangency", mp.tangency_check()),
            ("curvature", verify_mate_curvature(&mp)),
        ] {
            if !c.pass {
                return Err(format!("{name}: {c}"));
            }
        }
        Ok(())
    });
}

#[test]
fn composition_of_chained_mates() {
    for_all(|seed| {
        let lc = SupportFront::random(seed).legendre(N);
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + seed);
        let first = random_config(&mut rng, None);
        let a = mate(&lc, &first);
        // the chain shares the direction: θ₂ = τ₁
        let tau1 = first.tau.as_constant().unwrap();
        let b = mate(&a.mate, &random_config(&mut rng, Some(tau1)));
        let composite = match compose_mates(&a, &b).map_err(|e| e.to_string())? {
            Composition::Mate(m) => m,
            Composition::Identity { .. } => return Err("unexpected identity".into()),
        };
        let grid = lc.grid();
        let tol = a.mate_tol;
        for &t in &grid {
            let d = (composite.mate.position(t) - b.mate.position(t)).norm();
            if d > tol {
                return Err(format!("position at {t}: {d:e} > {tol:e}"));
            }
        }
        let c = verify_mate_curvature(&composite);
        c.pass.then_some(()).ok_or(format!("curvature: {c}"))
    });
}
