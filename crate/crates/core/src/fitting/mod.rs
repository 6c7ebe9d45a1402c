// SPDX-License-Identifier: Apache-2.0

//! Fitting every model family to `(temperature, value)` samples.
//!
//! Fits work in whatever unit the samples carry (watts or amperes); nothing
//! here converts between the two.

mod linear;
mod nonlinear;
mod piecewise;
mod polynomial;
mod taylor;

pub use linear::linear_fit;
pub use nonlinear::{fit_exp_model1, fit_exp_model2, FitOptions, NonlinearFit};
pub use piecewise::{equal_width_breakpoints, pwl_fit, pwl_from_tangents};
pub use polynomial::poly_fit;
pub use taylor::{taylor_linearize_bsim, taylor_step};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::Temperature;

/// One calibration sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplePoint {
    /// Kelvin.
    pub t: f64,
    pub p: f64,
}

impl SamplePoint {
    pub fn new(t: f64, p: f64) -> Result<Self> {
        Temperature::from_kelvin(t)?;
        if !p.is_finite() {
            return Err(Error::domain(format!(
                "sample value at {t} K is not finite"
            )));
        }
        Ok(SamplePoint { t, p })
    }

    pub fn temperature(&self) -> Temperature {
        Temperature::from_kelvin(self.t).expect("validated on construction")
    }
}

/// Samples `f` at each temperature.
pub fn sample_curve(temps: &[Temperature], f: impl Fn(Temperature) -> f64) -> Vec<SamplePoint> {
    temps
        .iter()
        .map(|&t| SamplePoint {
            t: t.kelvin(),
            p: f(t),
        })
        .collect()
}

/// Sum of squared residuals of `f` on the samples.
pub fn training_sse(samples: &[SamplePoint], f: impl Fn(Temperature) -> f64) -> f64 {
    samples
        .iter()
        .map(|s| {
            let r = f(s.temperature()) - s.p;
            r * r
        })
        .sum()
}

pub(crate) fn distinct_temperatures(samples: &[SamplePoint]) -> usize {
    let mut ts: Vec<f64> = samples.iter().map(|s| s.t).collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts.len()
}

pub(crate) fn check_samples(samples: &[SamplePoint], need: usize, what: &str) -> Result<()> {
    for s in samples {
        if !(s.t.is_finite() && s.t > 0.0 && s.p.is_finite()) {
            return Err(Error::domain(format!("invalid sample ({}, {})", s.t, s.p)));
        }
    }
    let distinct = distinct_temperatures(samples);
    if distinct < need {
        return Err(Error::degenerate(format!(
            "{what} needs at least {need} distinct temperatures, got {distinct}"
        )));
    }
    Ok(())
}
