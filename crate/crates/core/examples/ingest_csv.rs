// SPDX-License-Identifier: Apache-2.0

// Read a measured sweep from CSV, fit it, and check the fit against the
// file itself. Celsius columns are converted on the way in.

use leakage::analysis::percent_error_curve;
use leakage::cli::SweepFile;
use leakage::fitting::{fit_exp_model1, FitOptions};
use leakage::{BsimParams, Curve, LeakageModel, Temperature};

pub fn run_example() -> leakage::Result<()> {
    let params = BsimParams::default();
    // a coarse lab-style log: Celsius, CRLF endings, a blank trailing line
    let mut text = String::from("temperature_C,power_W\r\n");
    for c in (40..=80).step_by(5) {
        let t = Temperature::from_celsius(c as f64)?;
        text.push_str(&format!("{c},{:.6}\r\n", params.leakage(t)));
    }
    text.push_str("\r\n");

    let file = SweepFile::parse(text.as_bytes())?;
    println!("{} samples of {:?}", file.samples.len(), file.quantity);

    let fit = fit_exp_model1(&file.samples, &FitOptions::default())?;
    println!("exp_model1 {:?} converged = {}", fit.params, fit.converged);

    let measured = file.to_curve()?;
    let model = Curve::from_model(
        &LeakageModel::ExpModel1(fit.params),
        measured.temperatures(),
    )?;
    let report = percent_error_curve(&measured, &model)?;
    println!(
        "max {:.4} % at {:.2} K",
        report.max_percent, report.argmax_t
    );

    print!("{}", file.to_csv_string());
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
