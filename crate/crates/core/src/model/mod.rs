// SPDX-License-Identifier: Apache-2.0

//! Leakage model types and their evaluation.

pub mod adaptive;
pub mod bsim;
pub mod exponential;
pub mod linearized;
pub mod piecewise;
pub mod polynomial;

use serde::{Deserialize, Serialize};

pub use adaptive::{adaptive_eval, AdaptiveLinear, AdaptiveLinearState, DEFAULT_THRESHOLD_K};
pub use bsim::{
    bsim_leakage, bsim_normalization_constant, threshold_voltage, BsimInputs, BsimParams,
};
pub use exponential::{exp_model1, exp_model2, ExpModel1Params, ExpModel2Params};
pub use linearized::{liu_linearized_current, LinearizedParams};
pub use piecewise::{pwl_eval, PiecewiseLinearModel};
pub use polynomial::{poly_eval, PolynomialModel};

use crate::units::Temperature;

/// An affine function of temperature in point-slope form.
///
/// Evaluating at the anchor returns `value` bit-for-bit, which keeps tangent
/// lines exact at their expansion point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    anchor: f64,
    value: f64,
    slope: f64,
}

impl Line {
    pub fn through(anchor: f64, value: f64, slope: f64) -> Self {
        Line {
            anchor,
            value,
            slope,
        }
    }

    pub fn from_intercept(intercept: f64, slope: f64) -> Self {
        Line::through(0.0, intercept, slope)
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    pub fn value_at_anchor(&self) -> f64 {
        self.value
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    /// Value at 0 K.
    pub fn intercept(&self) -> f64 {
        self.value - self.slope * self.anchor
    }

    #[inline]
    pub fn eval(&self, t: Temperature) -> f64 {
        self.eval_kelvin(t.kelvin())
    }

    #[inline]
    pub fn eval_kelvin(&self, t: f64) -> f64 {
        self.value + self.slope * (t - self.anchor)
    }
}

/// Any of the supported leakage models.
#[derive(Debug, Clone, PartialEq)]
pub enum LeakageModel {
    Bsim(BsimParams),
    Line(Line),
    Linearized(LinearizedParams),
    Polynomial(PolynomialModel),
    PiecewiseLinear(PiecewiseLinearModel),
    ExpModel1(ExpModel1Params),
    ExpModel2(ExpModel2Params),
    Adaptive(AdaptiveLinear),
}

impl LeakageModel {
    pub fn family(&self) -> &'static str {
        match self {
            LeakageModel::Bsim(_) => "bsim",
            LeakageModel::Line(_) => "linear",
            LeakageModel::Linearized(_) => "linearized",
            LeakageModel::Polynomial(_) => "polynomial",
            LeakageModel::PiecewiseLinear(_) => "piecewise_linear",
            LeakageModel::ExpModel1(_) => "exp_model1",
            LeakageModel::ExpModel2(_) => "exp_model2",
            LeakageModel::Adaptive(_) => "adaptive_linear",
        }
    }

    /// Point evaluation. The adaptive model is evaluated from its initial
    /// state; use [`eval_curve`](Self::eval_curve) to thread its state
    /// through a sequence.
    #[inline]
    pub fn eval(&self, t: Temperature) -> f64 {
        match self {
            LeakageModel::Bsim(p) => bsim_leakage(t, p),
            LeakageModel::Line(l) => l.eval(t),
            LeakageModel::Linearized(p) => liu_linearized_current(t, p),
            LeakageModel::Polynomial(m) => poly_eval(m, t),
            LeakageModel::PiecewiseLinear(m) => pwl_eval(m, t),
            LeakageModel::ExpModel1(p) => exp_model1(t, p),
            LeakageModel::ExpModel2(p) => exp_model2(t, p),
            LeakageModel::Adaptive(a) => a.initial.eval(t, &a.reference).0,
        }
    }

    pub fn eval_curve(&self, temps: &[Temperature]) -> Vec<f64> {
        match self {
            LeakageModel::Adaptive(a) => a.eval_sequence(temps).0,
            _ => temps.iter().map(|&t| self.eval(t)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(v: f64) -> Temperature {
        Temperature::from_kelvin(v).unwrap()
    }

    #[test]
    fn line_forms_agree() {
        let a = Line::through(300.0, 2.0, 0.5);
        let b = Line::from_intercept(a.intercept(), 0.5);
        for t in [250.0, 300.0, 350.0] {
            assert!((a.eval(k(t)) - b.eval(k(t))).abs() < 1e-12);
        }
        assert_eq!(a.eval(k(300.0)), 2.0);
        assert_eq!(a.intercept(), -148.0);
    }

    #[test]
    fn evaluation_is_pure() {
        let p = BsimParams::default();
        let models = [
            LeakageModel::Bsim(p),
            LeakageModel::Adaptive(AdaptiveLinear::new(p, k(318.15), 10.0).unwrap()),
            LeakageModel::ExpModel2(ExpModel2Params {
                c0: 1e-6,
                c1: -1000.0,
                c2: -300.0,
            }),
        ];
        let temps: Vec<_> = (0..50).map(|i| k(313.15 + i as f64)).collect();
        for m in &models {
            let a = m.eval_curve(&temps);
            let b = m.eval_curve(&temps);
            assert!(a.iter().zip(&b).all(|(x, y)| x.to_bits() == y.to_bits()));
        }
    }

    #[test]
    fn adaptive_curve_threads_state() {
        let p = BsimParams::default();
        let a = AdaptiveLinear::new(p, k(318.15), 10.0).unwrap();
        let m = LeakageModel::Adaptive(a);
        let temps = [k(318.15), k(340.0), k(341.0)];
        let curve = m.eval_curve(&temps);
        // 341 is within 10 K of the re-linearized reference at 340
        let tangent = taylor(&p, 340.0);
        assert_eq!(curve[2], tangent.eval(k(341.0)));
        // point evaluation starts over from the initial state
        assert_eq!(m.eval(k(341.0)), taylor(&p, 341.0).eval(k(341.0)));
    }

    fn taylor(p: &BsimParams, t: f64) -> Line {
        crate::fitting::taylor_linearize_bsim(p, k(t)).unwrap()
    }
}
