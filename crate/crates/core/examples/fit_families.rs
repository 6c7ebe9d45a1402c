// SPDX-License-Identifier: Apache-2.0

// Every fittable family against the same sampled curve, ranked by
// training error.

use leakage::fitting::{
    fit_exp_model1, fit_exp_model2, linear_fit, poly_fit, pwl_fit, sample_curve, training_sse,
    FitOptions,
};
use leakage::{BsimParams, LeakageModel, TemperatureSweep};

pub fn run_example() -> leakage::Result<()> {
    let params = BsimParams::default();
    let sweep = TemperatureSweep::default();
    let samples = sample_curve(sweep.points(), |t| params.leakage(t));
    let opts = FitOptions::default();

    let exp1 = fit_exp_model1(&samples, &opts)?;
    let exp2 = fit_exp_model2(&samples, &opts)?;
    println!(
        "exp_model1: {:?} after {} iterations",
        exp1.params, exp1.iterations
    );
    println!(
        "exp_model2: {:?} after {} iterations",
        exp2.params, exp2.iterations
    );

    let mut fits = vec![
        ("linear", LeakageModel::Line(linear_fit(&samples)?)),
        (
            "pwl:3",
            LeakageModel::PiecewiseLinear(pwl_fit(&samples, 3)?),
        ),
        ("exp_model1", LeakageModel::ExpModel1(exp1.params)),
        ("exp_model2", LeakageModel::ExpModel2(exp2.params)),
    ];
    for (name, d) in [("quadratic", 2), ("cubic", 3), ("quartic", 4)] {
        fits.push((name, LeakageModel::Polynomial(poly_fit(&samples, d)?)));
    }

    let mut ranked: Vec<(&str, f64)> = fits
        .iter()
        .map(|(name, m)| (*name, training_sse(&samples, |t| m.eval(t))))
        .collect();
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1));
    for (name, sse) in ranked {
        println!("{name:<11} sse = {sse:.3e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
