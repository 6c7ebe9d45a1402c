// SPDX-License-Identifier: Apache-2.0

//! Exact subthreshold leakage expression.
//!
//! ```text
//! P(T) = C · v_T² · exp((V_GS − V_th(T) − V_off) / (η·v_T)) · (1 − exp(−V_DS / v_T))
//! V_th(T) = V_th0 + k_th · (T − T_amb)
//! ```
//!
//! The proportionality constant `C` is not a free input. It is solved from
//! the condition `P(T_amb) = P_leak0` when the parameters are built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::{thermal_voltage, Temperature};

/// Raw device and operating-point inputs.
///
/// `Default` gives the 28 nm-class reference point used throughout the crate:
/// 45 °C ambient, 0.7 V supply, 0.15 V threshold falling 4 mV/K, 2.4 mV
/// offset, η = 2 and 0.1 W of leakage at ambient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BsimInputs {
    /// Ambient (normalization) temperature, kelvin.
    pub t_amb: f64,
    pub v_gs: f64,
    pub v_ds: f64,
    /// Threshold voltage at `t_amb`.
    pub vth0: f64,
    /// Threshold temperature coefficient in V/K; negative for real devices.
    pub vth_temp_coeff: f64,
    pub v_off: f64,
    pub eta: f64,
    /// Leakage power at `t_amb`, watts.
    pub p_leak0: f64,
}

impl Default for BsimInputs {
    fn default() -> Self {
        BsimInputs {
            t_amb: 318.15,
            v_gs: 0.7,
            v_ds: 0.7,
            vth0: 0.15,
            vth_temp_coeff: -0.004,
            v_off: 0.0024,
            eta: 2.0,
            p_leak0: 0.1,
        }
    }
}

impl BsimInputs {
    fn validate(&self) -> Result<()> {
        let all = [
            self.t_amb,
            self.v_gs,
            self.v_ds,
            self.vth0,
            self.vth_temp_coeff,
            self.v_off,
            self.eta,
            self.p_leak0,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("BSIM parameters must be finite"));
        }
        if self.t_amb <= 0.0 {
            return Err(Error::domain("t_amb must be positive"));
        }
        if self.eta <= 0.0 {
            return Err(Error::domain("eta must be positive"));
        }
        if self.p_leak0 <= 0.0 {
            return Err(Error::domain("p_leak0 must be positive"));
        }
        Ok(())
    }
}

/// Validated parameters with the cached normalization constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BsimParams {
    inputs: BsimInputs,
    norm_constant: f64,
}

impl BsimParams {
    pub fn new(inputs: BsimInputs) -> Result<Self> {
        inputs.validate()?;
        let norm_constant = bsim_normalization_constant(&inputs)?;
        Ok(BsimParams {
            inputs,
            norm_constant,
        })
    }

    pub fn inputs(&self) -> &BsimInputs {
        &self.inputs
    }

    /// `C` in watts per volt².
    pub fn norm_constant(&self) -> f64 {
        self.norm_constant
    }

    pub fn t_amb(&self) -> Temperature {
        Temperature::from_kelvin(self.inputs.t_amb).expect("validated")
    }

    pub fn leakage(&self, t: Temperature) -> f64 {
        bsim_leakage(t, self)
    }
}

impl Default for BsimParams {
    fn default() -> Self {
        BsimParams::new(BsimInputs::default()).expect("default inputs are valid")
    }
}

pub fn threshold_voltage(t: Temperature, p: &BsimParams) -> f64 {
    threshold_from_inputs(t.kelvin(), &p.inputs)
}

#[inline]
fn threshold_from_inputs(kelvin: f64, p: &BsimInputs) -> f64 {
    p.vth0 + p.vth_temp_coeff * (kelvin - p.t_amb)
}

/// Everything in the leakage expression except `C`.
#[inline]
fn unnormalized(t: Temperature, p: &BsimInputs) -> f64 {
    let vt = thermal_voltage(t);
    let vth = threshold_from_inputs(t.kelvin(), p);
    let exponent = (p.v_gs - vth - p.v_off) / (p.eta * vt);
    // 1 − exp(−V_DS/v_T) without cancellation for small V_DS
    let drain = -(-p.v_ds / vt).exp_m1();
    vt * vt * exponent.exp() * drain
}

/// Solves `C` from `P(T_amb) = P_leak0`.
pub fn bsim_normalization_constant(p: &BsimInputs) -> Result<f64> {
    p.validate()?;
    let t_amb = Temperature::from_kelvin(p.t_amb)?;
    let shape = unnormalized(t_amb, p);
    if !(shape.is_finite() && shape > 0.0) {
        return Err(Error::domain(format!(
            "leakage expression at t_amb evaluates to {shape}; cannot normalize \
             (check v_ds > 0 and the exponent range)"
        )));
    }
    let c = p.p_leak0 / shape;
    if !c.is_finite() {
        return Err(Error::domain("normalization constant overflows"));
    }
    Ok(c)
}

#[inline]
pub fn bsim_leakage(t: Temperature, p: &BsimParams) -> f64 {
    p.norm_constant * unnormalized(t, &p.inputs)
}
