// SPDX-License-Identifier: Apache-2.0

//! Evaluation-cost microbenchmarks.
//!
//! Each run evaluates a model at every sweep point between two reads of a
//! monotonic clock. The first [`WARMUP_RUNS`] runs are discarded and the
//! median of the rest is reported. Outputs are summed into a checksum that is
//! passed through [`black_box`] so the evaluations cannot be optimized away.
//!
//! Timing is single-threaded and exclusive: a [`TimingSession`] must be held,
//! and only one can exist per process at a time.

use std::hint::black_box;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analysis::{NamedModel, TemperatureSweep};
use crate::error::{Error, Result};
use crate::fitting::{
    fit_exp_model1, fit_exp_model2, poly_fit, pwl_fit, sample_curve, taylor_linearize_bsim,
    FitOptions,
};
use crate::model::{
    AdaptiveLinear, AdaptiveLinearState, BsimParams, LeakageModel, DEFAULT_THRESHOLD_K,
};
use crate::units::Temperature;

pub const WARMUP_RUNS: usize = 3;
pub const MIN_RUNS: usize = 11;
pub const DEFAULT_RUNS: usize = 21;

/// Row names of [`run_suite`], in order.
pub const SUITE_MODELS: [&str; 9] = [
    "bsim",
    "linear",
    "pwl3",
    "quadratic",
    "cubic",
    "quartic",
    "exp_model1",
    "exp_model2",
    "adaptive",
];

static TIMING_ACTIVE: AtomicBool = AtomicBool::new(false);

/// Something that can be evaluated point by point across a sweep.
pub trait SweepModel {
    /// Called before each pass over the sweep.
    fn begin_sweep(&mut self) {}

    fn eval(&mut self, t: Temperature) -> f64;
}

impl<F: FnMut(Temperature) -> f64> SweepModel for F {
    #[inline]
    fn eval(&mut self, t: Temperature) -> f64 {
        self(t)
    }
}

/// Adapts a [`LeakageModel`]; the adaptive variant restarts from its initial
/// state on every pass so each pass produces the same outputs.
pub struct ModelRunner<'a> {
    model: &'a LeakageModel,
    state: Option<AdaptiveLinearState>,
}

impl<'a> ModelRunner<'a> {
    pub fn new(model: &'a LeakageModel) -> Self {
        ModelRunner { model, state: None }
    }
}

impl SweepModel for ModelRunner<'_> {
    fn begin_sweep(&mut self) {
        if let LeakageModel::Adaptive(a) = self.model {
            self.state = Some(a.initial);
        }
    }

    #[inline]
    fn eval(&mut self, t: Temperature) -> f64 {
        match (self.model, self.state.as_mut()) {
            (LeakageModel::Adaptive(a), Some(state)) => {
                let (v, next) = state.eval(t, &a.reference);
                *state = next;
                v
            }
            (m, _) => m.eval(t),
        }
    }
}

/// One pass over the sweep. Returns the output checksum.
#[inline(never)]
fn sweep_pass<M: SweepModel + ?Sized>(model: &mut M, points: &[Temperature]) -> f64 {
    model.begin_sweep();
    let mut checksum = 0.0;
    for &t in points {
        checksum += model.eval(black_box(t));
    }
    black_box(checksum)
}

/// Checksum of a single pass, outside any timing session.
pub fn untimed_checksum<M: SweepModel + ?Sized>(model: &mut M, sweep: &TemperatureSweep) -> f64 {
    sweep_pass(model, sweep.points())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelTiming {
    pub median_ns: u64,
    /// Timed runs after warm-up, in execution order.
    pub samples_ns: Vec<u64>,
    /// Output checksum of one pass; identical for every pass.
    pub checksum: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingRow {
    pub model_name: String,
    pub median_ns: u64,
    pub runs: usize,
    pub sweep_points: usize,
    pub checksum: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingReport {
    pub rows: Vec<TimingRow>,
    /// Median cost of a pass with an empty evaluator.
    pub baseline_ns: u64,
    pub runs: usize,
    pub warmup_runs: usize,
    pub sweep_points: usize,
    /// Smallest observed non-zero clock increment.
    pub clock_resolution_ns: u64,
}

impl TimingReport {
    pub fn row(&self, name: &str) -> Option<&TimingRow> {
        self.rows.iter().find(|r| r.model_name == name)
    }

    pub fn median(&self, name: &str) -> Option<u64> {
        self.row(name).map(|r| r.median_ns)
    }
}

pub fn validate_runs(runs: usize) -> Result<()> {
    if runs < MIN_RUNS || runs.is_multiple_of(2) {
        return Err(Error::usage(format!(
            "runs must be odd and at least {MIN_RUNS}, got {runs}"
        )));
    }
    Ok(())
}

pub fn median(samples: &[u64]) -> u64 {
    let mut sorted = samples.to_vec();
    sorted.sort_unstable();
    sorted[sorted.len() / 2]
}

/// Exclusive right to run timing in this process.
#[derive(Debug)]
pub struct TimingSession {
    _private: (),
}

impl TimingSession {
    /// Fails with [`Error::Busy`] if another session is alive.
    pub fn acquire() -> Result<Self> {
        TIMING_ACTIVE
            .compare_exchange(false, true, Ordering::AcqRel, Ordering::Acquire)
            .map_err(|_| Error::Busy("another timing session is in progress".into()))?;
        Ok(TimingSession { _private: () })
    }

    pub fn time_model<M: SweepModel + ?Sized>(
        &self,
        model: &mut M,
        sweep: &TemperatureSweep,
        runs: usize,
    ) -> Result<ModelTiming> {
        validate_runs(runs)?;
        let points = sweep.points();
        let mut checksum = None;
        let mut samples_ns = Vec::with_capacity(runs);
        for run in 0..WARMUP_RUNS + runs {
            let start = Instant::now();
            let sum = sweep_pass(model, points);
            let elapsed = start.elapsed();
            if run >= WARMUP_RUNS {
                samples_ns.push(elapsed.as_nanos() as u64);
            }
            match checksum {
                None => checksum = Some(sum),
                Some(c) if c.to_bits() != sum.to_bits() => {
                    return Err(Error::domain(format!(
                        "model output changed between timing passes ({c} vs {sum})"
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(ModelTiming {
            median_ns: median(&samples_ns),
            samples_ns,
            checksum: checksum.unwrap_or(0.0),
        })
    }

    /// Cost of a pass whose evaluator does nothing.
    pub fn baseline(&self, sweep: &TemperatureSweep, runs: usize) -> Result<ModelTiming> {
        let mut noop = |_: Temperature| 0.0;
        self.time_model(&mut noop, sweep, runs)
    }
}

impl Drop for TimingSession {
    fn drop(&mut self) {
        TIMING_ACTIVE.store(false, Ordering::Release);
    }
}

/// Smallest positive step of [`Instant`] over a short busy loop.
pub fn clock_resolution() -> Duration {
    let mut best = Duration::MAX;
    for _ in 0..1000 {
        let a = Instant::now();
        let mut b = Instant::now();
        while b == a {
            b = Instant::now();
        }
        best = best.min(b - a);
    }
    best
}

/// The nine models of the timing suite, fitted on `params` over `sweep`.
pub fn suite_models(params: &BsimParams, sweep: &TemperatureSweep) -> Result<Vec<NamedModel>> {
    let samples = sample_curve(sweep.points(), |t| params.leakage(t));
    let opts = FitOptions::default();
    let t_amb = params.t_amb();
    let fit = |name: &str, r: Result<LeakageModel>| r.map_err(|e| e.in_model(name));

    let models = vec![
        LeakageModel::Bsim(*params),
        fit(
            "linear",
            taylor_linearize_bsim(params, t_amb).map(LeakageModel::Line),
        )?,
        fit(
            "pwl3",
            pwl_fit(&samples, 3).map(LeakageModel::PiecewiseLinear),
        )?,
        fit(
            "quadratic",
            poly_fit(&samples, 2).map(LeakageModel::Polynomial),
        )?,
        fit("cubic", poly_fit(&samples, 3).map(LeakageModel::Polynomial))?,
        fit(
            "quartic",
            poly_fit(&samples, 4).map(LeakageModel::Polynomial),
        )?,
        fit(
            "exp_model1",
            fit_exp_model1(&samples, &opts).map(|f| LeakageModel::ExpModel1(f.params)),
        )?,
        fit(
            "exp_model2",
            fit_exp_model2(&samples, &opts).map(|f| LeakageModel::ExpModel2(f.params)),
        )?,
        fit(
            "adaptive",
            AdaptiveLinear::new(*params, t_amb, DEFAULT_THRESHOLD_K).map(LeakageModel::Adaptive),
        )?,
    ];
    Ok(SUITE_MODELS
        .iter()
        .zip(models)
        .map(|(name, model)| NamedModel::new(*name, model))
        .collect())
}

/// Fits every suite model, then times each one in turn. Fitting is not
/// part of the measurement.
pub fn run_suite(
    params: &BsimParams,
    sweep: &TemperatureSweep,
    runs: usize,
) -> Result<TimingReport> {
    validate_runs(runs)?;
    let models = suite_models(params, sweep)?;
    let session = TimingSession::acquire()?;
    let baseline = session.baseline(sweep, runs)?;
    let mut rows = Vec::with_capacity(models.len());
    for named in &models {
        let mut runner = ModelRunner::new(&named.model);
        let timing = session
            .time_model(&mut runner, sweep, runs)
            .map_err(|e| e.in_model(&named.name))?;
        rows.push(TimingRow {
            model_name: named.name.clone(),
            median_ns: timing.median_ns,
            runs,
            sweep_points: sweep.len(),
            checksum: timing.checksum,
        });
    }
    drop(session);
    Ok(TimingReport {
        rows,
        baseline_ns: baseline.median_ns,
        runs,
        warmup_runs: WARMUP_RUNS,
        sweep_points: sweep.len(),
        clock_resolution_ns: clock_resolution().as_nanos() as u64,
    })
}
