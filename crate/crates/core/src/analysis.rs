// SPDX-License-Identifier: Apache-2.0

//! Temperature sweeps, percent-error curves and model comparison tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{BsimParams, LeakageModel};
use crate::units::Temperature;

/// Two temperature grids match when every pair of points is this close, K.
pub const GRID_TOLERANCE: f64 = 1e-9;

/// Reference values smaller than this make relative error meaningless.
pub const MIN_REFERENCE_MAGNITUDE: f64 = 1e-30;

/// Uniform temperature grid `start, start + step, …` not exceeding `stop`.
///
/// Points are computed as `start + i·step`, never by accumulation.
#[derive(Debug, Clone, PartialEq)]
pub struct TemperatureSweep {
    start: f64,
    stop: f64,
    step: f64,
    points: Vec<Temperature>,
}

impl TemperatureSweep {
    /// Bounds in kelvin.
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        make_sweep(start, stop, step)
    }

    /// Bounds in °C; stored in kelvin.
    pub fn from_celsius(start_c: f64, stop_c: f64, step_c: f64) -> Result<Self> {
        make_sweep(
            Temperature::from_celsius(start_c)?.kelvin(),
            Temperature::from_celsius(stop_c)?.kelvin(),
            step_c,
        )
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn points(&self) -> &[Temperature] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// 40 °C to 80 °C in 0.1 °C steps: 401 points.
impl Default for TemperatureSweep {
    fn default() -> Self {
        make_sweep(313.15, 353.15, 0.1).expect("default sweep is valid")
    }
}

pub fn make_sweep(start: f64, stop: f64, step: f64) -> Result<TemperatureSweep> {
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(Error::domain("sweep bounds must be finite"));
    }
    if step <= 0.0 {
        return Err(Error::domain(format!(
            "sweep step must be positive, got {step}"
        )));
    }
    if start >= stop {
        return Err(Error::domain(format!(
            "sweep start ({start} K) must be below stop ({stop} K)"
        )));
    }
    Temperature::from_kelvin(start)?;
    let intervals = ((stop - start) / step + GRID_TOLERANCE).floor();
    if intervals > 1e8 {
        return Err(Error::domain("sweep has too many points"));
    }
    let points = (0..=intervals as usize)
        .map(|i| Temperature::from_kelvin(start + step * i as f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(TemperatureSweep {
        start,
        stop,
        step,
        points,
    })
}

/// Values of some quantity at an ordered list of temperatures.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    temperatures: Vec<Temperature>,
    values: Vec<f64>,
}

impl Curve {
    pub fn new(temperatures: Vec<Temperature>, values: Vec<f64>) -> Result<Self> {
        if temperatures.len() != values.len() {
            return Err(Error::domain(format!(
                "curve has {} temperatures but {} values",
                temperatures.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain(format!(
                "curve contains non-finite value {v}"
            )));
        }
        Ok(Curve {
            temperatures,
            values,
        })
    }

    pub fn from_model(model: &LeakageModel, temps: &[Temperature]) -> Result<Self> {
        Curve::new(temps.to_vec(), model.eval_curve(temps))
    }

    pub fn temperatures(&self) -> &[Temperature] {
        &self.temperatures
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scaled(&self, factor: f64) -> Curve {
        Curve {
            temperatures: self.temperatures.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    fn check_same_grid(&self, other: &Curve) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::domain(format!(
                "sweep mismatch: {} reference points vs {} model points",
                self.len(),
                other.len()
            )));
        }
        for (i, (a, b)) in self
            .temperatures
            .iter()
            .zip(&other.temperatures)
            .enumerate()
        {
            if (a.kelvin() - b.kelvin()).abs() > GRID_TOLERANCE {
                return Err(Error::domain(format!(
                    "sweep mismatch at point {i}: {} K vs {} K",
                    a.kelvin(),
                    b.kelvin()
                )));
            }
        }
        Ok(())
    }
}

/// How a pointwise error is normalized before converting to percent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorMetric {
    /// `|model − ref| / |ref(T)|`.
    PointwiseRelative,
    /// `|model − ref| / max_T |ref(T)|`.
    NormalizedByMax,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub metric: ErrorMetric,
    /// `(kelvin, percent)` per sweep point.
    pub pointwise: Vec<(f64, f64)>,
    pub max_percent: f64,
    pub mean_percent: f64,
    /// First temperature at which `max_percent` is reached.
    pub argmax_t: f64,
}

/// Pointwise-relative percent error of `model` against `reference`.
pub fn percent_error_curve(reference: &Curve, model: &Curve) -> Result<ErrorReport> {
    percent_error_curve_with(reference, model, ErrorMetric::PointwiseRelative)
}

pub fn percent_error_curve_with(
    reference: &Curve,
    model: &Curve,
    metric: ErrorMetric,
) -> Result<ErrorReport> {
    reference.check_same_grid(model)?;
    if reference.is_empty() {
        return Err(Error::domain("cannot compare empty curves"));
    }
    let peak = reference.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut pointwise = Vec::with_capacity(reference.len());
    for ((t, &r), &m) in reference
        .temperatures
        .iter()
        .zip(&reference.values)
        .zip(&model.values)
    {
        let denom = match metric {
            ErrorMetric::PointwiseRelative => r.abs(),
            ErrorMetric::NormalizedByMax => peak,
        };
        if denom < MIN_REFERENCE_MAGNITUDE {
            return Err(Error::domain(format!(
                "reference value {r} at {} K is too close to zero for a relative error",
                t.kelvin()
            )));
        }
        pointwise.push((t.kelvin(), (m - r).abs() / denom * 100.0));
    }

    let (mut argmax_t, mut max_percent) = pointwise[0];
    for &(t, e) in &pointwise[1..] {
        if e > max_percent {
            max_percent = e;
            argmax_t = t;
        }
    }
    let mean_percent = pointwise.iter().map(|p| p.1).sum::<f64>() / pointwise.len() as f64;
    Ok(ErrorReport {
        metric,
        pointwise,
        max_percent,
        mean_percent,
        argmax_t,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NamedModel {
    pub name: String,
    pub model: LeakageModel,
}

impl NamedModel {
    pub fn new(name: impl Into<String>, model: LeakageModel) -> Self {
        NamedModel {
            name: name.into(),
            model,
        }
    }
}

/// One row of a comparison: both metrics summarized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub model: String,
    pub max_percent: f64,
    pub mean_percent: f64,
    pub argmax_t: f64,
    pub normalized_max_percent: f64,
    pub normalized_mean_percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub reference_name: String,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonTable {
    pub fn row(&self, model: &str) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.model == model)
    }
}

/// Compares precomputed curves against a reference curve, in input order.
pub fn compare_curves(
    reference_name: &str,
    reference: &Curve,
    models: &[(String, Curve)],
) -> Result<ComparisonTable> {
    if models.is_empty() {
        return Err(Error::usage("no models to compare"));
    }
    let rows = models
        .iter()
        .map(|(name, curve)| {
            let rel = percent_error_curve_with(reference, curve, ErrorMetric::PointwiseRelative)
                .map_err(|e| e.in_model(name))?;
            let nrm = percent_error_curve_with(reference, curve, ErrorMetric::NormalizedByMax)
                .map_err(|e| e.in_model(name))?;
            Ok(ComparisonRow {
                model: name.clone(),
                max_percent: rel.max_percent,
                mean_percent: rel.mean_percent,
                argmax_t: rel.argmax_t,
                normalized_max_percent: nrm.max_percent,
                normalized_mean_percent: nrm.mean_percent,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonTable {
        reference_name: reference_name.to_string(),
        rows,
    })
}

/// Evaluates the BSIM reference and every model on the sweep and compares.
pub fn compare_models(
    reference_params: &BsimParams,
    models: &[NamedModel],
    sweep: &TemperatureSweep,
) -> Result<ComparisonTable> {
    let temps = sweep.points();
    let reference = Curve::from_model(&LeakageModel::Bsim(*reference_params), temps)?;
    let curves = models
        .iter()
        .map(|m| {
            Curve::from_model(&m.model, temps)
                .map(|c| (m.name.clone(), c))
                .map_err(|e| e.in_model(&m.name))
        })
        .collect::<Result<Vec<_>>>()?;
    compare_curves("bsim", &reference, &curves)
}
