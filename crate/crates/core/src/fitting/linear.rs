// SPDX-License-Identifier: Apache-2.0

use crate::error::Result;
use crate::fitting::{check_samples, SamplePoint};
use crate::model::Line;

/// Ordinary least-squares regression line.
///
/// Computed on temperatures centered at their mean; the returned line is
/// anchored at that mean.
pub fn linear_fit(samples: &[SamplePoint]) -> Result<Line> {
    check_samples(samples, 2, "linear fit")?;
    let xs: Vec<f64> = samples.iter().map(|s| s.t).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.p).collect();
    let (mx, my, slope) = centered_ols(&xs, &ys);
    Ok(Line::through(mx, my, slope))
}

/// Returns `(mean_x, mean_y, slope)`. Callers guarantee ≥ 2 distinct `x`.
pub(crate) fn centered_ols(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let dx = x - mx;
        sxx += dx * dx;
        sxy += dx * (y - my);
    }
    (mx, my, sxy / sxx)
}
