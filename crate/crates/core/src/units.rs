// SPDX-License-Identifier: Apache-2.0

//! Temperature newtype and physical constants.

use std::fmt;

use crate::error::{Error, Result};

/// Boltzmann constant over the elementary charge, in volts per kelvin.
pub const BOLTZMANN_OVER_CHARGE: f64 = 8.617333262e-5;

/// Offset between the Celsius and kelvin scales.
pub const ZERO_CELSIUS_K: f64 = 273.15;

/// An absolute temperature. Always strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn from_kelvin(kelvin: f64) -> Result<Self> {
        if kelvin.is_finite() && kelvin > 0.0 {
            Ok(Temperature(kelvin))
        } else {
            Err(Error::domain(format!(
                "temperature must be a positive finite kelvin value, got {kelvin}"
            )))
        }
    }

    pub fn from_celsius(celsius: f64) -> Result<Self> {
        Self::from_kelvin(celsius + ZERO_CELSIUS_K)
    }

    #[inline]
    pub fn kelvin(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn celsius(self) -> f64 {
        self.0 - ZERO_CELSIUS_K
    }
}

impl fmt::Display for Temperature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} K", self.0)
    }
}

/// Thermal voltage `kT/q` in volts.
#[inline]
pub fn thermal_voltage(t: Temperature) -> f64 {
    BOLTZMANN_OVER_CHARGE * t.kelvin()
}
