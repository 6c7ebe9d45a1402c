// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::Line;
use crate::units::Temperature;

/// Slack when comparing a temperature against a breakpoint, kelvin. Sweep
/// grids are built as `start + i·step`, so a grid point meant to sit on a
/// breakpoint can be off by a few ulps.
pub const BREAKPOINT_TOLERANCE: f64 = 1e-9;

/// Independent affine segments over `[b_0, b_1), [b_1, b_2), …, [b_{k−1}, b_k]`.
///
/// Segments need not meet at the breakpoints. A temperature sitting on an
/// interior breakpoint belongs to the segment on its right; temperatures
/// outside the covered range use the nearest edge segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiecewiseLinearModel {
    breakpoints: Vec<f64>,
    segments: Vec<Line>,
}

impl PiecewiseLinearModel {
    pub fn new(breakpoints: Vec<f64>, segments: Vec<Line>) -> Result<Self> {
        if segments.is_empty() || breakpoints.len() != segments.len() + 1 {
            return Err(Error::domain(format!(
                "piecewise model needs k ≥ 1 segments and k + 1 breakpoints, got {} and {}",
                segments.len(),
                breakpoints.len()
            )));
        }
        if breakpoints.iter().any(|b| !b.is_finite()) {
            return Err(Error::domain("breakpoints must be finite"));
        }
        if breakpoints.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::domain("breakpoints must be strictly increasing"));
        }
        Ok(PiecewiseLinearModel {
            breakpoints,
            segments,
        })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[Line] {
        &self.segments
    }

    /// `(intercept, slope)` per segment.
    pub fn segment_coefficients(&self) -> Vec<(f64, f64)> {
        self.segments
            .iter()
            .map(|l| (l.intercept(), l.slope()))
            .collect()
    }

    pub fn segment_index(&self, t: Temperature) -> usize {
        let t = t.kelvin();
        let interior = &self.breakpoints[1..self.breakpoints.len() - 1];
        interior.partition_point(|&b| b - BREAKPOINT_TOLERANCE <= t)
    }

    pub fn eval(&self, t: Temperature) -> f64 {
        pwl_eval(self, t)
    }
}

#[inline]
pub fn pwl_eval(m: &PiecewiseLinearModel, t: Temperature) -> f64 {
    m.segments[m.segment_index(t)].eval(t)
}
