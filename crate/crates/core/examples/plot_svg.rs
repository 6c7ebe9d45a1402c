// SPDX-License-Identifier: Apache-2.0

// Render power curves for the reference and two fits into an SVG file.

use leakage::cli::plot::LineChart;
use leakage::fitting::{poly_fit, pwl_fit, sample_curve};
use leakage::{BsimParams, TemperatureSweep};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BsimParams::default();
    let sweep = TemperatureSweep::default();
    let samples = sample_curve(sweep.points(), |t| params.leakage(t));
    let quad = poly_fit(&samples, 2)?;
    let pwl = pwl_fit(&samples, 3)?;

    let xs: Vec<f64> = sweep.points().iter().map(|t| t.celsius()).collect();
    let series = |f: &dyn Fn(leakage::Temperature) -> f64| -> Vec<(f64, f64)> {
        xs.iter()
            .zip(sweep.points())
            .map(|(&x, &t)| (x, f(t)))
            .collect()
    };

    let mut chart = LineChart::new("Leakage power", "temperature (°C)", "power (W)");
    chart.add_series("bsim", series(&|t| params.leakage(t)));
    chart.add_series("quadratic", series(&|t| quad.eval(t)));
    chart.add_series("pwl:3", series(&|t| pwl.eval(t)));
    let svg = chart.render()?;

    let path = std::env::temp_dir().join("leakage_fits.svg");
    std::fs::write(&path, &svg)?;
    println!("wrote {} ({} bytes)", path.display(), svg.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
