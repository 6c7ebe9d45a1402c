// SPDX-License-Identifier: Apache-2.0

// The reference leakage curve: normalization at ambient and how steeply it
// climbs across a 40 to 80 °C sweep.

use leakage::model::{bsim_normalization_constant, threshold_voltage};
use leakage::units::thermal_voltage;
use leakage::{BsimInputs, BsimParams, Temperature, TemperatureSweep};

pub fn run_example() -> leakage::Result<()> {
    let inputs = BsimInputs::default();
    let params = BsimParams::new(inputs)?;
    println!(
        "normalization constant C = {:.6e}",
        bsim_normalization_constant(&inputs)?
    );

    for c in [40.0, 45.0, 60.0, 80.0] {
        let t = Temperature::from_celsius(c)?;
        println!(
            "{c:>5.1} °C  vT = {:.5} V  Vth = {:.4} V  P = {:.5} W",
            thermal_voltage(t),
            threshold_voltage(t, &params),
            params.leakage(t),
        );
    }

    let sweep = TemperatureSweep::default();
    let first = params.leakage(sweep.points()[0]);
    let last = params.leakage(sweep.points()[sweep.len() - 1]);
    println!(
        "{} points, power rises {:.2}x over the sweep",
        sweep.len(),
        last / first
    );

    // a hotter supply point, renormalized so ambient still reads 0.1 W
    let hot = BsimParams::new(BsimInputs {
        v_gs: 0.8,
        ..inputs
    })?;
    println!(
        "v_gs = 0.8 V: P(ambient) = {:.6} W",
        hot.leakage(hot.t_amb())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
