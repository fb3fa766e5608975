//! Fourth-order finite differences and cubic interpolation on uniform grids.
//!
//! Interior points use central stencils (5 points for first and second
//! derivatives, 7 for the third). Near the ends of a non-periodic grid the
//! stencil slides inward and becomes one-sided, keeping fourth order.

use crate::scalar::Real;

/// Finite-difference weights for derivatives `0..=max_order` at `x0` from
/// nodes `xs` (Fornberg's recursion). `c[k][j]` weighs node `j` for order `k`.
pub fn fornberg_weights(x0: f64, xs: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = xs.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

fn central_half_width(order: usize) -> usize {
    match order {
        1 | 2 => 2,
        _ => 3,
    }
}

/// Weights (unit spacing) for derivative `order` using integer offsets `lo..lo+len`.
fn stencil(order: usize, lo: isize, len: usize) -> Vec<f64> {
    let xs: Vec<f64> = (0..len).map(|k| (lo + k as isize) as f64).collect();
    fornberg_weights(0.0, &xs, order).swap_remove(order)
}

/// Derivative of `order` (1..=3) of uniformly spaced samples with spacing `h`.
///
/// Needs at least 8 samples when not periodic so every one-sided stencil fits.
pub fn derivative<T: Real>(samples: &[T], h: T, order: usize, periodic: bool) -> Vec<T> {
    assert!((1..=3).contains(&order), "derivative order must be 1..=3");
    let n = samples.len();
    let r = central_half_width(order);
    let central: Vec<T> = stencil(order, -(r as isize), 2 * r + 1)
        .into_iter()
        .map(T::lit)
        .collect();
    let scale = h.powi(order as i32);
    let mut out = vec![T::zero(); n];

    if periodic {
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (k, w) in central.iter().enumerate() {
                let j = (i as isize + k as isize - r as isize).rem_euclid(n as isize) as usize;
                acc = acc + *w * samples[j];
            }
            *o = acc / scale;
        }
        return out;
    }

    let width = order + 4;
    assert!(n >= width.max(2 * r + 1), "too few samples for one-sided stencil");
    for (i, o) in out.iter_mut().enumerate() {
        let (start, weights): (usize, Vec<T>) = if i >= r && i + r < n {
            (i - r, central.clone())
        } else {
            let start = if i < r { 0 } else { n - width };
            let lo = start as isize - i as isize;
            (start, stencil(order, lo, width).into_iter().map(T::lit).collect())
        };
        let mut acc = T::zero();
        for (k, w) in weights.iter().enumerate() {
            acc = acc + *w * samples[start + k];
        }
        *o = acc / scale;
    }
    out
}

/// Uniform sample grid, used to locate a parameter between samples.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UniformGrid<T> {
    pub t0: T,
    pub h: T,
    pub n: usize,
    pub periodic: bool,
}

impl<T: Real> UniformGrid<T> {
    pub fn node(&self, i: usize) -> T {
        self.t0 + self.h * T::from_count(i)
    }

    pub fn nodes(&self) -> Vec<T> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Period of a periodic grid (`n · h`).
    pub fn period(&self) -> T {
        self.h * T::from_count(self.n)
    }

    /// Cell index `i` and local coordinate `s` with `t = t_i + s·h`.
    /// Periodic grids wrap; others clamp to the end cells (so `s` may leave [0, 1]).
    pub fn locate(&self, t: T) -> (usize, T) {
        let mut u = (t - self.t0) / self.h;
        if self.periodic {
            let n = T::from_count(self.n);
            u = u - (u / n).floor() * n;
            let mut i = u.floor().to_usize().unwrap_or(0);
            if i >= self.n {
                i = self.n - 1;
            }
            (i, u - T::from_count(i))
        } else {
            let last = self.n - 2;
            let fi = u.floor();
            let i = if fi < T::zero() {
                0
            } else {
                fi.to_usize().unwrap_or(last).min(last)
            };
            (i, u - T::from_count(i))
        }
    }

    fn wrap(&self, i: isize) -> usize {
        if self.periodic {
            i.rem_euclid(self.n as isize) as usize
        } else {
            i.clamp(0, self.n as isize - 1) as usize
        }
    }

    /// Cubic Hermite interpolation of `values` with nodal derivatives `derivs`.
    pub fn hermite(&self, values: &[T], derivs: &[T], t: T) -> T {
        let (i, s) = self.locate(t);
        let j = self.wrap(i as isize + 1);
        hermite(values[i], values[j], derivs[i], derivs[j], self.h, s)
    }

    /// Four-point Lagrange interpolation of `values`.
    pub fn lagrange4(&self, values: &[T], t: T) -> T {
        let (i, s) = self.locate(t);
        // nodes i-1, i, i+1, i+2 at local coordinates -1, 0, 1, 2
        let (base, x) = if self.periodic {
            (i as isize - 1, s + T::one())
        } else {
            let b = (i as isize - 1).clamp(0, self.n as isize - 4);
            (b, s + T::from_count(i) - T::lit(b as f64))
        };
        let mut acc = T::zero();
        for k in 0..4 {
            let mut w = T::one();
            for m in 0..4 {
                if m != k {
                    w = w * (x - T::from_count(m)) / (T::lit(k as f64) - T::from_count(m));
                }
            }
            acc = acc + w * values[self.wrap(base + k as isize)];
        }
        acc
    }
}

/// Cubic Hermite on one cell of width `h`, at local coordinate `s`.
#[inline]
pub fn hermite<T: Real>(y0: T, y1: T, m0: T, m1: T, h: T, s: T) -> T {
    let s2 = s * s;
    let s3 = s2 * s;
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let h00 = two * s3 - three * s2 + T::one();
    let h10 = s3 - two * s2 + s;
    let h01 = three * s2 - two * s3;
    let h11 = s3 - s2;
    h00 * y0 + h10 * h * m0 + h01 * y1 + h11 * h * m1
}

/// Derivative (w.r.t. the parameter) of the Hermite cubic.
#[inline]
pub fn hermite_deriv<T: Real>(y0: T, y1: T, m0: T, m1: T, h: T, s: T) -> T {
    let s2 = s * s;
    let six = T::lit(6.0);
    let d00 = six * s2 - six * s;
    let d10 = T::lit(3.0) * s2 - T::lit(4.0) * s + T::one();
    let d01 = -d00;
    let d11 = T::lit(3.0) * s2 - T::lit(2.0) * s;
    (d00 * y0 + d01 * y1) / h + d10 * m0 + d11 * m1
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn classic_stencils() {
        let w = stencil(1, -2, 5);
        assert!(close(&w, &[1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0]));
        let w = stencil(2, -2, 5);
        assert!(close(
            &w,
            &[-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0]
        ));
        let w = stencil(1, 0, 5);
        assert!(close(&w, &[-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -1.0 / 4.0]));
    }

    fn max_err(order: usize, n: usize, periodic: bool) -> f64 {
        let (a, b) = (0.3, 2.9);
        let h = if periodic {
            2.0 * PI / n as f64
        } else {
            (b - a) / (n - 1) as f64
        };
        let t0 = if periodic { 0.0 } else { a };
        let ts: Vec<f64> = (0..n).map(|i| t0 + h * i as f64).collect();
        let f: Vec<f64> = ts.iter().map(|t| (2.0 * t).sin() + 0.5 * t.cos()).collect();
        let exact = |t: f64| match order {
            1 => 2.0 * (2.0 * t).cos() - 0.5 * t.sin(),
            2 => -4.0 * (2.0 * t).sin() - 0.5 * t.cos(),
            _ => -8.0 * (2.0 * t).cos() + 0.5 * t.sin(),
        };
        let d = derivative(&f, h, order, periodic);
        ts.iter()
            .zip(&d)
            .map(|(t, v)| (v - exact(*t)).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn fourth_order_convergence_all_orders() {
        for periodic in [true, false] {
            for order in 1..=3 {
                let e1 = max_err(order, 64, periodic);
                let e2 = max_err(order, 128, periodic);
                assert!(
                    e1 / e2 >= 12.0,
                    "order {order} periodic {periodic}: {e1:e} -> {e2:e}"
                );
            }
        }
    }

    #[test]
    fn constant_has_zero_derivative() {
        let f = vec![3.5f64; 16];
        for order in 1..=3 {
            for p in [true, false] {
                assert!(derivative(&f, 0.1, order, p).iter().all(|v| v.abs() < 1e-9));
            }
        }
    }

    #[test]
    fn hermite_reproduces_cubics() {
        let g = UniformGrid {
            t0: 0.0,
            h: 0.5,
            n: 8,
            periodic: false,
        };
        let p = |t: f64| 1.0 - 2.0 * t + 0.5 * t * t * t;
        let dp = |t: f64| -2.0 + 1.5 * t * t;
        let v: Vec<f64> = g.nodes().iter().map(|&t| p(t)).collect();
        let d: Vec<f64> = g.nodes().iter().map(|&t| dp(t)).collect();
        for &t in &[0.1, 1.3, 2.77, 3.5] {
            assert!((g.hermite(&v, &d, t) - p(t)).abs() < 1e-12);
            assert!((g.lagrange4(&v, t) - p(t)).abs() < 1e-12);
        }
        let (i, s) = g.locate(1.3);
        let hd = hermite_deriv(v[i], v[i + 1], d[i], d[i + 1], g.h, s);
        assert!((hd - dp(1.3)).abs() < 1e-12);
    }

    #[test]
    fn periodic_locate_wraps() {
        let g = UniformGrid {
            t0: 0.0f64,
            h: 0.25,
            n: 8,
            periodic: true,
        };
        let (i, s) = g.locate(2.0 + 0.3);
        assert_eq!(i, 1);
        assert!((s - 0.2).abs() < 1e-12);
        let (i, _) = g.locate(-0.1);
        assert_eq!(i, 7);
    }
}
