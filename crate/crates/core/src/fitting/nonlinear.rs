// SPDX-License-Identifier: Apache-2.0

//! Nonlinear least squares for the exponential families.
//!
//! Both fits run a damped Gauss-Newton (Levenberg-Marquardt style) iteration
//! on a rescaled problem: values are divided by `max |p|` and the parameters
//! are re-expressed around the mean sample temperature `Tm`,
//!
//! ```text
//! c0·T²·exp(c1/T) = A·(T/Tm)²·exp(b·(Tm/T − 1)),   A = c0·Tm²·exp(c1/Tm), b = c1/Tm
//! ```
//!
//! so every unknown is O(1). Initial guesses come from log-linear
//! regressions of `ln(p/T²)` against `1/T`; nothing is random.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fitting::linear::centered_ols;
use crate::fitting::{check_samples, SamplePoint};
use crate::model::{ExpModel1Params, ExpModel2Params};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitOptions {
    pub max_iterations: usize,
    /// Stop once an accepted step improves the SSE by less than this
    /// fraction.
    pub tolerance: f64,
    /// Initial damping factor.
    pub damping_init: f64,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            max_iterations: 200,
            tolerance: 1e-12,
            damping_init: 1e-3,
        }
    }
}

impl FitOptions {
    fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::domain("max_iterations must be at least 1"));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::domain("tolerance must be positive"));
        }
        if !(self.damping_init > 0.0 && self.damping_init.is_finite()) {
            return Err(Error::domain("damping_init must be positive"));
        }
        Ok(())
    }
}

/// Result of a nonlinear fit. `params` is the best iterate found even when
/// `converged` is false.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NonlinearFit<P> {
    pub params: P,
    /// Training SSE in sample units.
    pub sse: f64,
    /// Training SSE after dividing the samples by `max |p|`.
    pub scaled_sse: f64,
    pub iterations: usize,
    pub converged: bool,
}

const MAX_DAMPING: f64 = 1e16;
const MIN_DAMPING: f64 = 1e-15;

/// Rescaled view of the samples.
struct Scaled {
    /// `Tm / T` per sample.
    ratio: Vec<f64>,
    y: Vec<f64>,
    t_mean: f64,
    p_scale: f64,
}

impl Scaled {
    fn new(samples: &[SamplePoint]) -> Self {
        let t_mean = samples.iter().map(|s| s.t).sum::<f64>() / samples.len() as f64;
        let p_max = samples.iter().fold(0.0f64, |m, s| m.max(s.p.abs()));
        let p_scale = if p_max > 0.0 { p_max } else { 1.0 };
        Scaled {
            ratio: samples.iter().map(|s| t_mean / s.t).collect(),
            y: samples.iter().map(|s| s.p / p_scale).collect(),
            t_mean,
            p_scale,
        }
    }
}

/// `(T/Tm)²·exp(b·(Tm/T − 1))` written in terms of `r = Tm/T`.
#[inline]
fn core_term(r: f64, b: f64) -> f64 {
    (b * (r - 1.0)).exp() / (r * r)
}

type ModelFn = fn(r: f64, x: &Vector3<f64>) -> (f64, Vector3<f64>);

fn exp1_scaled(r: f64, x: &Vector3<f64>) -> (f64, Vector3<f64>) {
    let (a, b, g) = (x[0], x[1], x[2]);
    let u = core_term(r, b);
    (a * u + g, Vector3::new(u, a * u * (r - 1.0), 1.0))
}

fn exp2_scaled(r: f64, x: &Vector3<f64>) -> (f64, Vector3<f64>) {
    let (a, b, d) = (x[0], x[1], x[2]);
    let u = core_term(r, b);
    let e = (d * r).exp();
    let s = -(d * r).exp_m1();
    (
        a * u * s,
        Vector3::new(u * s, a * u * s * (r - 1.0), -a * u * e * r),
    )
}

fn sse_of(model: ModelFn, data: &Scaled, x: &Vector3<f64>) -> f64 {
    data.ratio
        .iter()
        .zip(&data.y)
        .map(|(&r, &y)| {
            let d = model(r, x).0 - y;
            d * d
        })
        .sum()
}

struct Solution {
    x: Vector3<f64>,
    sse: f64,
    iterations: usize,
    converged: bool,
}

fn damped_gauss_newton(
    model: ModelFn,
    data: &Scaled,
    x0: Vector3<f64>,
    opts: &FitOptions,
) -> Solution {
    let mut x = x0;
    let mut sse = sse_of(model, data, &x);
    let mut lambda = opts.damping_init;
    let mut iterations = 0;

    if sse == 0.0 {
        return Solution {
            x,
            sse,
            iterations,
            converged: true,
        };
    }

    while iterations < opts.max_iterations {
        iterations += 1;
        let mut jtj = Matrix3::zeros();
        let mut jtr = Vector3::zeros();
        let mut jnorm2 = 0.0;
        for (&r, &y) in data.ratio.iter().zip(&data.y) {
            let (v, g) = model(r, &x);
            jtj += g * g.transpose();
            jtr += g * (v - y);
            jnorm2 += g.norm_squared();
        }

        let diag_floor = 1e-12 * jtj.diagonal().max().max(f64::MIN_POSITIVE);
        let mut accepted = None;
        while lambda <= MAX_DAMPING {
            let mut a = jtj;
            for i in 0..3 {
                a[(i, i)] += lambda * jtj[(i, i)].max(diag_floor);
            }
            if let Some(step) = a.lu().solve(&(-jtr)) {
                let candidate = x + step;
                let candidate_sse = sse_of(model, data, &candidate);
                if candidate_sse.is_finite() && candidate_sse <= sse {
                    accepted = Some((candidate, candidate_sse));
                    lambda = (lambda / 10.0).max(MIN_DAMPING);
                    break;
                }
            }
            lambda *= 10.0;
        }

        match accepted {
            Some((candidate, candidate_sse)) => {
                let improvement = (sse - candidate_sse) / sse;
                x = candidate;
                sse = candidate_sse;
                if sse == 0.0 || improvement < opts.tolerance {
                    return Solution {
                        x,
                        sse,
                        iterations,
                        converged: true,
                    };
                }
            }
            None => {
                // No descent step at any damping: a stationary point when the
                // gradient is orthogonal to the residual up to roundoff.
                let stationary = jtr.norm() <= 1e-8 * (jnorm2 * sse).sqrt();
                return Solution {
                    x,
                    sse,
                    iterations,
                    converged: stationary,
                };
            }
        }
    }
    Solution {
        x,
        sse,
        iterations,
        converged: false,
    }
}

/// Log-linear start for `shift + c·u(T)` on samples where `p − shift` keeps
/// one sign: regress `ln(|p − shift| / (T/Tm)² / bracket)` on `Tm/T − 1`.
fn log_linear_start(data: &Scaled, shift: f64, bracket: impl Fn(f64) -> f64) -> Option<(f64, f64)> {
    let sign = if data.y.iter().all(|&y| y - shift > 0.0) {
        1.0
    } else if data.y.iter().all(|&y| y - shift < 0.0) {
        -1.0
    } else {
        return None;
    };
    let xs: Vec<f64> = data.ratio.iter().map(|r| r - 1.0).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for (&r, &y) in data.ratio.iter().zip(&data.y) {
        let br = bracket(r);
        if br.is_nan() || br <= 0.0 {
            return None;
        }
        ys.push((sign * (y - shift) * r * r / br).ln());
    }
    let (mx, my, b) = centered_ols(&xs, &ys);
    let ln_a = my - b * mx;
    let (a, b) = (sign * ln_a.exp(), b);
    (a.is_finite() && b.is_finite()).then_some((a, b))
}

fn start_candidates_exp1(data: &Scaled) -> Vec<Vector3<f64>> {
    let y_min = data.y.iter().copied().fold(f64::INFINITY, f64::min);
    let y_max = data.y.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = y_max - y_min;
    // Shifted start: keep all shifted values strictly positive.
    let shift = if y_min > 0.0 {
        0.5 * y_min
    } else {
        y_min - 0.5 * y_min.abs().max(span).max(f64::MIN_POSITIVE)
    };
    let mut out = Vec::new();
    for g in [0.0, shift] {
        if let Some((a, b)) = log_linear_start(data, g, |_| 1.0) {
            out.push(Vector3::new(a, b, g));
        }
    }
    if out.is_empty() {
        let mean = data.y.iter().sum::<f64>() / data.y.len() as f64;
        out.push(Vector3::new(0.0, 0.0, mean));
    }
    out
}

fn start_candidates_exp2(data: &Scaled, t_max: f64) -> Vec<Vector3<f64>> {
    // Coarse log grid for c2 over [−10·T_max, −1e-3] K, inner log-linear
    // solve for the other two.
    const GRID: usize = 200;
    let (lo, hi) = (1e-3f64.ln(), (10.0 * t_max).ln());
    let mut best: Option<(f64, Vector3<f64>)> = None;
    for i in 0..GRID {
        let c2 = -(lo + (hi - lo) * i as f64 / (GRID - 1) as f64).exp();
        let d = c2 / data.t_mean;
        let Some((a, b)) = log_linear_start(data, 0.0, |r| -(d * r).exp_m1()) else {
            continue;
        };
        let x = Vector3::new(a, b, d);
        let e = sse_of(exp2_scaled, data, &x);
        if e.is_finite() && best.as_ref().is_none_or(|(be, _)| e < *be) {
            best = Some((e, x));
        }
    }
    match best {
        Some((_, x)) => vec![x],
        None => {
            let mean = data.y.iter().sum::<f64>() / data.y.len() as f64;
            vec![Vector3::new(mean / 0.63, 0.0, -1.0)]
        }
    }
}

fn solve_from(
    model: ModelFn,
    data: &Scaled,
    starts: Vec<Vector3<f64>>,
    opts: &FitOptions,
) -> Solution {
    starts
        .into_iter()
        .map(|x0| damped_gauss_newton(model, data, x0, opts))
        .reduce(|best, s| if s.sse < best.sse { s } else { best })
        .expect("at least one start")
}

/// Fits `c0·T²·exp(c1/T) + i_gate`.
pub fn fit_exp_model1(
    samples: &[SamplePoint],
    opts: &FitOptions,
) -> Result<NonlinearFit<ExpModel1Params>> {
    opts.validate()?;
    check_samples(samples, 3, "exponential model fit")?;
    let data = Scaled::new(samples);
    let sol = solve_from(exp1_scaled, &data, start_candidates_exp1(&data), opts);
    let (a, b, g) = (sol.x[0], sol.x[1], sol.x[2]);
    let tm = data.t_mean;
    let params = ExpModel1Params {
        c0: a * data.p_scale / (tm * tm * b.exp()),
        c1: b * tm,
        i_gate: g * data.p_scale,
    };
    Ok(NonlinearFit {
        params,
        sse: sol.sse * data.p_scale * data.p_scale,
        scaled_sse: sol.sse,
        iterations: sol.iterations,
        converged: sol.converged,
    })
}

/// Fits `c0·T²·exp(c1/T)·(1 − exp(c2/T))`.
pub fn fit_exp_model2(
    samples: &[SamplePoint],
    opts: &FitOptions,
) -> Result<NonlinearFit<ExpModel2Params>> {
    opts.validate()?;
    check_samples(samples, 3, "exponential model fit")?;
    let data = Scaled::new(samples);
    let t_max = samples.iter().fold(0.0f64, |m, s| m.max(s.t));
    let sol = solve_from(
        exp2_scaled,
        &data,
        start_candidates_exp2(&data, t_max),
        opts,
    );
    let (a, b, d) = (sol.x[0], sol.x[1], sol.x[2]);
    let tm = data.t_mean;
    let params = ExpModel2Params {
        c0: a * data.p_scale / (tm * tm * b.exp()),
        c1: b * tm,
        c2: d * tm,
    };
    Ok(NonlinearFit {
        params,
        sse: sol.sse * data.p_scale * data.p_scale,
        scaled_sse: sol.sse,
        iterations: sol.iterations,
        converged: sol.converged,
    })
}
