// SPDX-License-Identifier: Apache-2.0

// Piecewise-linear models: regression per segment versus tangents at the
// segment midpoints, for a growing number of segments.

use leakage::analysis::{compare_models, NamedModel};
use leakage::fitting::{equal_width_breakpoints, pwl_fit, pwl_from_tangents, sample_curve};
use leakage::{BsimParams, LeakageModel, TemperatureSweep};

pub fn run_example() -> leakage::Result<()> {
    let params = BsimParams::default();
    let sweep = TemperatureSweep::default();
    let samples = sample_curve(sweep.points(), |t| params.leakage(t));

    let mut models = Vec::new();
    for n in [1, 2, 3, 5, 8] {
        models.push(NamedModel::new(
            format!("fit {n}"),
            LeakageModel::PiecewiseLinear(pwl_fit(&samples, n)?),
        ));
        models.push(NamedModel::new(
            format!("tangent {n}"),
            LeakageModel::PiecewiseLinear(pwl_from_tangents(
                &params,
                equal_width_breakpoints(313.15, 353.15, n),
            )?),
        ));
    }
    let table = compare_models(&params, &models, &sweep)?;
    println!("{:<10} {:>10} {:>10}", "model", "max %", "mean %");
    for row in &table.rows {
        println!(
            "{:<10} {:>10.4} {:>10.4}",
            row.model, row.max_percent, row.mean_percent
        );
    }

    if let LeakageModel::PiecewiseLinear(m) = &models[4].model {
        for (i, line) in m.segments().iter().enumerate() {
            println!(
                "segment {i}: [{:.2}, {:.2}] K, slope {:.5} W/K",
                m.breakpoints()[i],
                m.breakpoints()[i + 1],
                line.slope()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
