// SPDX-License-Identifier: Apache-2.0

//! Two-column sweep CSV files.
//!
//! ```text
//! temperature_K,power_W
//! 313.15,0.0784430624505
//! ```
//!
//! The temperature column may instead be `temperature_C`; the value column
//! may be `current_A`. Rows must be strictly increasing in temperature.
//! Files written by this module always use kelvin and LF line endings.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::analysis::Curve;
use crate::cli::format::format_sig;
use crate::error::{Error, Result};
use crate::fitting::SamplePoint;
use crate::units::{Temperature, ZERO_CELSIUS_K};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemperatureUnit {
    Kelvin,
    Celsius,
}

impl TemperatureUnit {
    pub fn header(self) -> &'static str {
        match self {
            TemperatureUnit::Kelvin => "temperature_K",
            TemperatureUnit::Celsius => "temperature_C",
        }
    }
}

/// What the value column measures. Power and current are never converted
/// into each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    PowerW,
    CurrentA,
}

impl Quantity {
    pub fn header(self) -> &'static str {
        match self {
            Quantity::PowerW => "power_W",
            Quantity::CurrentA => "current_A",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepFile {
    pub quantity: Quantity,
    /// Samples in kelvin regardless of the source unit.
    pub samples: Vec<SamplePoint>,
}

impl SweepFile {
    pub fn temperatures(&self) -> Vec<Temperature> {
        self.samples.iter().map(|s| s.temperature()).collect()
    }

    pub fn to_curve(&self) -> Result<Curve> {
        Curve::new(
            self.temperatures(),
            self.samples.iter().map(|s| s.p).collect(),
        )
    }

    pub fn read(path: &Path) -> Result<SweepFile> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        Self::parse(file)
    }

    pub fn parse<R: Read>(reader: R) -> Result<SweepFile> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut records = rdr.records();

        let header = match records.next() {
            Some(r) => r.map_err(csv_error)?,
            None => {
                return Err(Error::Parse {
                    line: 1,
                    message: "missing header row".into(),
                })
            }
        };
        let bad_header = |msg: &str| Error::Parse {
            line: 1,
            message: format!("{msg}; expected temperature_K|temperature_C,power_W|current_A"),
        };
        if header.len() != 2 {
            return Err(bad_header("header must have exactly two columns"));
        }
        let unit = match header[0].trim_start_matches('\u{feff}') {
            "temperature_K" => TemperatureUnit::Kelvin,
            "temperature_C" => TemperatureUnit::Celsius,
            other => return Err(bad_header(&format!("unknown temperature column `{other}`"))),
        };
        let quantity = match &header[1] {
            "power_W" => Quantity::PowerW,
            "current_A" => Quantity::CurrentA,
            other => return Err(bad_header(&format!("unknown value column `{other}`"))),
        };

        let mut samples: Vec<SamplePoint> = Vec::new();
        for record in records {
            let record = record.map_err(csv_error)?;
            let line = record.position().map(|p| p.line()).unwrap_or(0);
            if record.len() == 1 && record[0].is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            if record.len() != 2 {
                return Err(err(format!("expected 2 fields, found {}", record.len())));
            }
            let number = |i: usize| -> Result<f64> {
                let v: f64 = record[i]
                    .parse()
                    .map_err(|_| err(format!("`{}` is not a number", &record[i])))?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(err(format!("`{}` is not finite", &record[i])))
                }
            };
            let raw_t = number(0)?;
            let p = number(1)?;
            let t = match unit {
                TemperatureUnit::Kelvin => raw_t,
                TemperatureUnit::Celsius => raw_t + ZERO_CELSIUS_K,
            };
            if t <= 0.0 {
                return Err(err(format!(
                    "temperature {raw_t} is not above absolute zero"
                )));
            }
            if let Some(prev) = samples.last() {
                if t <= prev.t {
                    return Err(err(format!(
                        "temperatures must be strictly increasing ({t} K after {} K)",
                        prev.t
                    )));
                }
            }
            samples.push(SamplePoint { t, p });
        }
        if samples.is_empty() {
            return Err(Error::Data("sweep file has no data rows".into()));
        }
        Ok(SweepFile { quantity, samples })
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(
            w,
            "{},{}",
            TemperatureUnit::Kelvin.header(),
            self.quantity.header()
        )?;
        for s in &self.samples {
            writeln!(w, "{},{}", format_sig(s.t), format_sig(s.p))?;
        }
        w.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        self.write_to(BufWriter::new(file))
            .map_err(|e| Error::io(path, e))
    }
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}
