// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::Temperature;

/// Polynomial in the transformed variable `x = (T − center) / scale`.
///
/// Coefficients are in ascending degree. A model built with [`new`] has
/// `center = 0` and `scale = 1`, i.e. it is a plain polynomial in kelvin.
///
/// [`new`]: PolynomialModel::new
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialModel {
    coefficients: Vec<f64>,
    center: f64,
    scale: f64,
}

impl PolynomialModel {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        Self::with_transform(coefficients, 0.0, 1.0)
    }

    pub fn with_transform(coefficients: Vec<f64>, center: f64, scale: f64) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::domain("polynomial needs at least one coefficient"));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("polynomial coefficients must be finite"));
        }
        if !(center.is_finite() && scale.is_finite() && scale > 0.0) {
            return Err(Error::domain(
                "polynomial transform needs finite center and scale > 0",
            ));
        }
        Ok(PolynomialModel {
            coefficients,
            center,
            scale,
        })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn eval(&self, t: Temperature) -> f64 {
        poly_eval(self, t)
    }

    /// Expands into plain powers of kelvin. Badly conditioned for real
    /// temperature ranges; meant for inspection and small test problems.
    pub fn to_power_basis(&self) -> Vec<f64> {
        // Σ a_i ((T − c)/s)^i, expanded by repeated multiplication with (T − c)/s
        let n = self.coefficients.len();
        let mut out = vec![0.0; n];
        let mut term = vec![0.0; n];
        term[0] = 1.0;
        for (i, &a) in self.coefficients.iter().enumerate() {
            for j in 0..=i {
                out[j] += a * term[j];
            }
            if i + 1 < n {
                let mut next = vec![0.0; n];
                for j in 0..=i {
                    next[j + 1] += term[j] / self.scale;
                    next[j] -= term[j] * self.center / self.scale;
                }
                term = next;
            }
        }
        out
    }
}

/// Horner evaluation on the model's transformed temperature.
#[inline]
pub fn poly_eval(m: &PolynomialModel, t: Temperature) -> f64 {
    let x = (t.kelvin() - m.center) / m.scale;
    m.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}
