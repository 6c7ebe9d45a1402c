// SPDX-License-Identifier: Apache-2.0

//! Linear leakage with a moving expansion point.
//!
//! The state holds the tangent line of the reference model at `t_ref`. An
//! evaluation at `T` with `|T − t_ref| > threshold` first re-linearizes at
//! `T`. A drift of exactly `threshold` does not trigger an update.

use crate::error::{Error, Result};
use crate::fitting::taylor_linearize_bsim;
use crate::model::{BsimParams, Line};
use crate::units::Temperature;

/// Default re-linearization threshold, kelvin.
pub const DEFAULT_THRESHOLD_K: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveLinearState {
    tangent: Line,
    threshold: f64,
    relinearize_count: u64,
}

impl AdaptiveLinearState {
    pub fn new(reference: &BsimParams, t_ref: Temperature, threshold: f64) -> Result<Self> {
        if !(threshold.is_finite() && threshold > 0.0) {
            return Err(Error::domain(format!(
                "adaptive threshold must be positive, got {threshold}"
            )));
        }
        Ok(AdaptiveLinearState {
            tangent: taylor_linearize_bsim(reference, t_ref)?,
            threshold,
            relinearize_count: 0,
        })
    }

    pub fn t_ref(&self) -> f64 {
        self.tangent.anchor()
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn intercept(&self) -> f64 {
        self.tangent.intercept()
    }

    pub fn slope(&self) -> f64 {
        self.tangent.slope()
    }

    pub fn tangent(&self) -> Line {
        self.tangent
    }

    pub fn relinearize_count(&self) -> u64 {
        self.relinearize_count
    }

    /// Evaluates at `t`, returning the value and the successor state.
    pub fn eval(&self, t: Temperature, reference: &BsimParams) -> (f64, AdaptiveLinearState) {
        adaptive_eval(self, t, reference)
    }
}

pub fn adaptive_eval(
    state: &AdaptiveLinearState,
    t: Temperature,
    reference: &BsimParams,
) -> (f64, AdaptiveLinearState) {
    let mut next = *state;
    if (t.kelvin() - state.t_ref()).abs() > state.threshold {
        // t is positive and finite so the tangent is well defined unless the
        // finite-difference stencil leaves the domain (t < 1e-3 K).
        if let Ok(tangent) = taylor_linearize_bsim(reference, t) {
            next.tangent = tangent;
            next.relinearize_count += 1;
        }
    }
    (next.tangent.eval(t), next)
}

/// An adaptive model bundled with its reference: the initial state plus the
/// parameters it re-linearizes against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveLinear {
    pub reference: BsimParams,
    pub initial: AdaptiveLinearState,
}

impl AdaptiveLinear {
    pub fn new(reference: BsimParams, t_ref: Temperature, threshold: f64) -> Result<Self> {
        Ok(AdaptiveLinear {
            initial: AdaptiveLinearState::new(&reference, t_ref, threshold)?,
            reference,
        })
    }

    /// Walks `temps` in order, threading the state. Returns the values and
    /// the final state.
    pub fn eval_sequence(&self, temps: &[Temperature]) -> (Vec<f64>, AdaptiveLinearState) {
        let mut state = self.initial;
        let values = temps
            .iter()
            .map(|&t| {
                let (v, s) = state.eval(t, &self.reference);
                state = s;
                v
            })
            .collect();
        (values, state)
    }
}
