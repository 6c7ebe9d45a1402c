// SPDX-License-Identifier: Apache-2.0

//! Subthreshold leakage power as a function of temperature.
//!
//! The crate evaluates the BSIM-4 style subthreshold leakage expression and
//! the cheaper approximations commonly substituted for it in architectural
//! simulators:
//!
//! - tangent and regression lines, including the frozen-exponential
//!   linearization of the leakage current ([`model::LinearizedParams`]),
//! - piecewise-linear models with independent per-segment fits,
//! - polynomials of any degree on a centered and scaled temperature axis,
//! - the two exponential families `c0·T²·exp(c1/T)·(1 − exp(c2/T))` and
//!   `c0·T²·exp(c1/T) + I_gate`,
//! - an adaptive linear model that re-linearizes whenever the operating
//!   temperature drifts more than a threshold away from its reference.
//!
//! [`fitting`] fits every family to `(temperature, power)` samples,
//! [`analysis`] builds temperature sweeps and percent-error reports, and
//! [`bench`] measures per-model evaluation cost. [`cli`] holds the file
//! formats, the SVG plotter and the command implementations behind the
//! `leakage` binary.
//!
//! All temperatures are kelvin internally. Celsius only shows up at the
//! command-line and file boundaries.

pub mod analysis;
pub mod bench;
pub mod cli;
pub mod error;
pub mod fitting;
pub mod model;
pub mod units;

pub use analysis::{Curve, ErrorMetric, ErrorReport, TemperatureSweep};
pub use error::{Error, Result};
pub use model::{BsimInputs, BsimParams, LeakageModel, Line};
pub use units::Temperature;
