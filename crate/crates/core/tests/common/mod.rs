//! Random fronts built from support functions.
//!
//! With `n(φ) = (cos φ, sin φ)` and a support function `p`, the curve
//! `γ = p(φ) n + p'(φ) n'` has `γ' = (p + p'') n'`, so `ν = n(φ(t))` is a
//! Legendre normal with `ℓ = φ̇` and `β = φ̇ (p + p'')(φ)`. The zeros of
//! `p + p''` are singular points.

#![allow(dead_code)]

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Sub};

use frontal_core::curve::{CurveModel, ParamInterval};
use frontal_core::legendre::LegendreCurve;
use frontal_core::plane::Vec2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Value and first three derivatives of a scalar function of `t`.
#[derive(Clone, Copy, Debug)]
pub struct Jet3 {
    pub v: [f64; 4],
}

impl Jet3 {
    pub fn constant(c: f64) -> Self {
        Jet3 { v: [c, 0.0, 0.0, 0.0] }
    }

    pub fn scale(self, k: f64) -> Self {
        Jet3 { v: self.v.map(|x| k * x) }
    }

    pub fn sin(self) -> Self {
        let [u, u1, u2, u3] = self.v;
        let (s, c) = u.sin_cos();
        Jet3 {
            v: [
                s,
                c * u1,
                -s * u1 * u1 + c * u2,
                -c * u1.powi(3) - 3.0 * s * u1 * u2 + c * u3,
            ],
        }
    }

    pub fn cos(self) -> Self {
        let [u, u1, u2, u3] = self.v;
        let (s, c) = u.sin_cos();
        Jet3 {
            v: [
                c,
                -s * u1,
                -c * u1 * u1 - s * u2,
                s * u1.powi(3) - 3.0 * c * u1 * u2 - s * u3,
            ],
        }
    }
}

impl Add for Jet3 {
    type Output = Jet3;
    fn add(self, o: Jet3) -> Jet3 {
        Jet3 {
            v: [0, 1, 2, 3].map(|i| self.v[i] + o.v[i]),
        }
    }
}

impl Sub for Jet3 {
    type Output = Jet3;
    fn sub(self, o: Jet3) -> Jet3 {
        self + o.scale(-1.0)
    }
}

impl Mul for Jet3 {
    type Output = Jet3;
    fn mul(self, o: Jet3) -> Jet3 {
        let (a, b) = (self.v, o.v);
        Jet3 {
            v: [
                a[0] * b[0],
                a[1] * b[0] + a[0] * b[1],
                a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
                a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3],
            ],
        }
    }
}

/// `p(φ) = a₀ + Σ aₖ cos kφ + bₖ sin kφ` with the angle `φ(t) = t + ε sin(t + δ)`.
#[derive(Clone, Debug)]
pub struct SupportFront {
    pub a0: f64,
    pub harmonics: Vec<(f64, f64, f64)>,
    pub eps: f64,
    pub delta: f64,
}

impl SupportFront {
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a0 = rng.gen_range(0.5..1.5);
        let harmonics = (2..=4)
            .map(|k| {
                let amp = 0.4 / (k * k - 1) as f64;
                (k as f64, rng.gen_range(-amp..amp), rng.gen_range(-amp..amp))
            })
            .collect();
        SupportFront {
            a0,
            harmonics,
            eps: rng.gen_range(-0.3..0.3),
            delta: rng.gen_range(0.0..TAU),
        }
    }

    pub fn phi(&self, t: f64) -> Jet3 {
        let arg = Jet3 { v: [t + self.delta, 1.0, 0.0, 0.0] };
        Jet3 { v: [t, 1.0, 0.0, 0.0] } + arg.sin().scale(self.eps)
    }

    /// `p(φ)` and `p'(φ)` as jets in `t`.
    fn support(&self, phi: Jet3) -> (Jet3, Jet3) {
        let mut p = Jet3::constant(self.a0);
        let mut dp = Jet3::constant(0.0);
        for &(k, a, b) in &self.harmonics {
            let (c, s) = (phi.scale(k).cos(), phi.scale(k).sin());
            p = p + c.scale(a) + s.scale(b);
            dp = dp + s.scale(-k * a) + c.scale(k * b);
        }
        (p, dp)
    }

    pub fn gamma_jet(&self, t: f64) -> [Vec2<f64>; 4] {
        let phi = self.phi(t);
        let (p, dp) = self.support(phi);
        let (c, s) = (phi.cos(), phi.sin());
        let x = p * c - dp * s;
        let y = p * s + dp * c;
        [0, 1, 2, 3].map(|i| Vec2::new(x.v[i], y.v[i]))
    }

    pub fn nu_jet(&self, t: f64) -> [Vec2<f64>; 4] {
        let phi = self.phi(t);
        let (c, s) = (phi.cos(), phi.sin());
        [0, 1, 2, 3].map(|i| Vec2::new(c.v[i], s.v[i]))
    }

    /// Exact `(ℓ, β)` at `t`.
    pub fn curvature(&self, t: f64) -> (f64, f64) {
        let phi = self.phi(t);
        let mut w = self.a0;
        for &(k, a, b) in &self.harmonics {
            let (s, c) = (k * phi.v[0]).sin_cos();
            w += (1.0 - k * k) * (a * c + b * s);
        }
        (phi.v[1], phi.v[1] * w)
    }

    pub fn legendre(&self, n: usize) -> LegendreCurve<f64> {
        let iv = ParamInterval::full_turn(n).unwrap();
        let model = |f: fn(&SupportFront, f64) -> [Vec2<f64>; 4]| {
            let (a, b, c, d) = (self.clone(), self.clone(), self.clone(), self.clone());
            CurveModel::analytic(
                iv,
                move |t| f(&a, t)[0],
                move |t| f(&b, t)[1],
                move |t| f(&c, t)[2],
                move |t| f(&d, t)[3],
            )
        };
        LegendreCurve::new(model(SupportFront::gamma_jet), model(SupportFront::nu_jet)).unwrap()
    }
}
