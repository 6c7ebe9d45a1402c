// SPDX-License-Identifier: Apache-2.0

//! Closed-form exponential leakage families.

use serde::{Deserialize, Serialize};

use crate::units::Temperature;

/// `c0·T²·exp(c1/T) + i_gate`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpModel1Params {
    pub c0: f64,
    pub c1: f64,
    pub i_gate: f64,
}

/// `c0·T²·exp(c1/T)·(1 − exp(c2/T))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpModel2Params {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

#[inline]
pub fn exp_model1(t: Temperature, p: &ExpModel1Params) -> f64 {
    let t = t.kelvin();
    p.c0 * t * t * (p.c1 / t).exp() + p.i_gate
}

#[inline]
pub fn exp_model2(t: Temperature, p: &ExpModel2Params) -> f64 {
    let t = t.kelvin();
    p.c0 * t * t * (p.c1 / t).exp() * -(p.c2 / t).exp_m1()
}
