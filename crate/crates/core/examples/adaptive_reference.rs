// SPDX-License-Identifier: Apache-2.0

// A linear model that re-expands around the current temperature once the
// die drifts more than a threshold away from its expansion point.

use leakage::fitting::taylor_linearize_bsim;
use leakage::model::AdaptiveLinear;
use leakage::{BsimParams, Temperature};

pub fn run_example() -> leakage::Result<()> {
    let params = BsimParams::default();
    let t_amb = params.t_amb();
    let adaptive = AdaptiveLinear::new(params, t_amb, 10.0)?;
    let fixed = taylor_linearize_bsim(&params, t_amb)?;

    // warm-up, a hot spell, then cooling back down
    let trace: Vec<Temperature> = [
        318.15, 322.0, 327.0, 329.5, 335.0, 340.0, 351.0, 344.0, 330.0,
    ]
    .iter()
    .map(|&k| Temperature::from_kelvin(k))
    .collect::<leakage::Result<_>>()?;

    let mut state = adaptive.initial;
    println!(
        "{:>8} {:>8} {:>10} {:>10} {:>10}",
        "T (K)", "T_ref", "adaptive", "fixed", "bsim"
    );
    for &t in &trace {
        let (p, next) = state.eval(t, &params);
        state = next;
        println!(
            "{:>8.2} {:>8.2} {:>10.5} {:>10.5} {:>10.5}",
            t.kelvin(),
            state.t_ref(),
            p,
            fixed.eval(t),
            params.leakage(t)
        );
    }
    println!("relinearized {} times", state.relinearize_count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> leakage::Result<()> {
    run_example()
}
