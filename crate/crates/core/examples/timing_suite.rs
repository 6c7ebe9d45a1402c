// SPDX-License-Identifier: Apache-2.0

// Median cost of evaluating each model across a sweep. Build with
// `--release` for numbers worth comparing.

use leakage::bench::{run_suite, TimingSession, MIN_RUNS};
use leakage::{BsimParams, Temperature, TemperatureSweep};

pub fn run_example() -> leakage::Result<()> {
    let params = BsimParams::default();
    let sweep = TemperatureSweep::default();

    let report = run_suite(&params, &sweep, MIN_RUNS)?;
    println!(
        "baseline {} ns over {} points",
        report.baseline_ns, report.sweep_points
    );
    for row in &report.rows {
        let net = row.median_ns.saturating_sub(report.baseline_ns);
        println!(
            "{:<11} {:>9} ns  ({:.1} ns/point)",
            row.model_name,
            row.median_ns,
            net as f64 / row.sweep_points as f64
        );
    }

    // anything callable per point can be timed directly
    let session = TimingSession::acquire()?;
    let mut cube = |t: Temperature| t.kelvin().powi(3);
    let timing = session.time_model(&mut cube, &sweep, MIN_RUNS)?;
    println!("closure     {:>9} ns", timing.median_ns);
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
