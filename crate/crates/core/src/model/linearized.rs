// SPDX-License-Identifier: Apache-2.0

//! Leakage current linearized around a reference temperature with the
//! exponential frozen at `T_ref`:
//!
//! ```text
//! I(T) = I_gate + A_s·(W/L)·(k/q)²·exp(c/T_ref)·[T_ref² + (2·T_ref − c)·(T − T_ref)]
//! c    = (V_GS − V_th) / (η·k/q)
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::bsim::{threshold_voltage, BsimParams};
use crate::units::{Temperature, BOLTZMANN_OVER_CHARGE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearizedParams {
    pub i_gate: f64,
    /// Aggregate prefactor, A/K².
    pub a_s: f64,
    pub w_over_l: f64,
    pub eta: f64,
    /// Reference temperature, kelvin.
    pub t_ref: f64,
    pub v_gs: f64,
    pub v_th: f64,
}

impl LinearizedParams {
    pub fn new(p: LinearizedParams) -> Result<Self> {
        if !(p.t_ref.is_finite() && p.t_ref > 0.0) {
            return Err(Error::domain("t_ref must be positive"));
        }
        if !(p.eta.is_finite() && p.eta > 0.0) {
            return Err(Error::domain("eta must be positive"));
        }
        Ok(p)
    }

    /// Builds parameters whose exponent matches the BSIM exponent at `t_ref`
    /// (`V_th` absorbs the offset voltage) and whose prefactor makes the
    /// line pass through the BSIM value there. `A_s` then carries watts
    /// instead of amperes, which is fine for a proportional model.
    pub fn matched_to_bsim(p: &BsimParams, t_ref: Temperature) -> Self {
        let i = p.inputs();
        let mut lp = LinearizedParams {
            i_gate: 0.0,
            a_s: 1.0,
            w_over_l: 1.0,
            eta: i.eta,
            t_ref: t_ref.kelvin(),
            v_gs: i.v_gs,
            v_th: threshold_voltage(t_ref, p) + i.v_off,
        };
        let unit = liu_linearized_current(t_ref, &lp);
        lp.a_s = p.leakage(t_ref) / unit;
        lp
    }

    fn exponent_scale(&self) -> f64 {
        (self.v_gs - self.v_th) / (self.eta * BOLTZMANN_OVER_CHARGE)
    }

    fn prefactor(&self) -> f64 {
        let c = self.exponent_scale();
        self.a_s
            * self.w_over_l
            * BOLTZMANN_OVER_CHARGE
            * BOLTZMANN_OVER_CHARGE
            * (c / self.t_ref).exp()
    }

    /// dI/dT; constant because the model is affine.
    pub fn slope(&self) -> f64 {
        self.prefactor() * (2.0 * self.t_ref - self.exponent_scale())
    }
}

pub fn liu_linearized_current(t: Temperature, lp: &LinearizedParams) -> f64 {
    let c = lp.exponent_scale();
    let bracket = lp.t_ref * lp.t_ref + (2.0 * lp.t_ref - c) * (t.kelvin() - lp.t_ref);
    lp.i_gate + lp.prefactor() * bracket
}
