// SPDX-License-Identifier: Apache-2.0

//! Command-line surface: file formats, model selectors, SVG charts and the
//! five commands of the `leakage` binary.
//!
//! Exit codes: 0 success, 2 usage, 3 data/parse, 4 numeric/degenerate,
//! 5 I/O.

pub mod commands;
pub mod format;
pub mod plot;
pub mod selector;
pub mod sweep_file;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{Command, RunConfig};
pub use selector::ModelSelector;
pub use sweep_file::{Quantity, SweepFile, TemperatureUnit};

use crate::error::Result;

/// Parses arguments and runs the selected command.
pub fn run_from<I, T>(args: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config =
        RunConfig::try_parse_from(args).map_err(|e| crate::error::Error::usage(e.to_string()))?;
    commands::run(&config)
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match commands::run(&config) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("leakage: {e}");
            e.exit_code()
        }
    }
}
