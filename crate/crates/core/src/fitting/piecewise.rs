// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::fitting::{check_samples, linear_fit, taylor_linearize_bsim, SamplePoint};
use crate::model::{BsimParams, Line, PiecewiseLinearModel};
use crate::units::Temperature;

/// `n + 1` equally spaced breakpoints from `lo` to `hi`, endpoints exact.
pub fn equal_width_breakpoints(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let width = (hi - lo) / n as f64;
    (0..=n)
        .map(|i| if i == n { hi } else { lo + width * i as f64 })
        .collect()
}

/// Piecewise-linear fit with `n_segments` equal-width segments over the
/// sample range. Each segment is an independent regression line over the
/// samples it owns; a sample on an interior breakpoint belongs to the
/// segment on its right.
pub fn pwl_fit(samples: &[SamplePoint], n_segments: usize) -> Result<PiecewiseLinearModel> {
    if n_segments == 0 {
        return Err(Error::domain("piecewise fit needs at least one segment"));
    }
    check_samples(samples, 2, "piecewise fit")?;
    let (lo, hi) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s.t), hi.max(s.t))
        });
    let breakpoints = equal_width_breakpoints(lo, hi, n_segments);

    // Placeholder segments just to reuse the model's segment lookup.
    let flat = vec![Line::from_intercept(0.0, 0.0); n_segments];
    let layout = PiecewiseLinearModel::new(breakpoints.clone(), flat)?;
    let mut buckets: Vec<Vec<SamplePoint>> = vec![Vec::new(); n_segments];
    for s in samples {
        buckets[layout.segment_index(s.temperature())].push(*s);
    }

    let segments = buckets
        .iter()
        .enumerate()
        .map(|(i, bucket)| {
            linear_fit(bucket).map_err(|e| match e {
                Error::Degenerate(msg) => Error::degenerate(format!(
                    "segment {i} [{:.6}, {:.6}] K: {msg}",
                    breakpoints[i],
                    breakpoints[i + 1]
                )),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PiecewiseLinearModel::new(breakpoints, segments)
}

/// Piecewise model built from tangent lines of the reference, one per
/// segment, expanded at each segment's midpoint.
pub fn pwl_from_tangents(
    reference: &BsimParams,
    breakpoints: Vec<f64>,
) -> Result<PiecewiseLinearModel> {
    let segments = breakpoints
        .windows(2)
        .map(|w| taylor_linearize_bsim(reference, Temperature::from_kelvin(0.5 * (w[0] + w[1]))?))
        .collect::<Result<Vec<_>>>()?;
    PiecewiseLinearModel::new(breakpoints, segments)
}
