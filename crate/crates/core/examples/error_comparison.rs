// SPDX-License-Identifier: Apache-2.0

// Percent error of several models under both error metrics, plus where on
// the sweep each one is worst.

use leakage::analysis::{compare_models, percent_error_curve_with, NamedModel};
use leakage::fitting::{linear_fit, poly_fit, sample_curve, taylor_linearize_bsim};
use leakage::{BsimParams, Curve, ErrorMetric, LeakageModel, TemperatureSweep};

pub fn run_example() -> leakage::Result<()> {
    let params = BsimParams::default();
    let sweep = TemperatureSweep::default();
    let samples = sample_curve(sweep.points(), |t| params.leakage(t));

    let models = vec![
        NamedModel::new(
            "tangent@45C",
            LeakageModel::Line(taylor_linearize_bsim(&params, params.t_amb())?),
        ),
        NamedModel::new("regression", LeakageModel::Line(linear_fit(&samples)?)),
        NamedModel::new(
            "quadratic",
            LeakageModel::Polynomial(poly_fit(&samples, 2)?),
        ),
        NamedModel::new("cubic", LeakageModel::Polynomial(poly_fit(&samples, 3)?)),
    ];
    let table = compare_models(&params, &models, &sweep)?;
    println!(
        "{:<12} {:>9} {:>9} {:>9} {:>9}",
        "model", "max", "mean", "norm max", "at (K)"
    );
    for r in &table.rows {
        println!(
            "{:<12} {:>9.4} {:>9.4} {:>9.4} {:>9.2}",
            r.model, r.max_percent, r.mean_percent, r.normalized_max_percent, r.argmax_t
        );
    }

    // the pointwise series for one model, coarsely
    let reference = Curve::from_model(&LeakageModel::Bsim(params), sweep.points())?;
    let cubic = Curve::from_model(&models[3].model, sweep.points())?;
    let report = percent_error_curve_with(&reference, &cubic, ErrorMetric::PointwiseRelative)?;
    for (t, e) in report.pointwise.iter().step_by(50) {
        println!("cubic at {t:.2} K: {e:+.4} %");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
