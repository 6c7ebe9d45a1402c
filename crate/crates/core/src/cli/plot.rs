// SPDX-License-Identifier: Apache-2.0

//! Standalone SVG line charts.

use std::fmt::Write;

use crate::cli::format::format_sig;
use crate::error::{Error, Result};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineChart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    pub width: f64,
    pub height: f64,
}

impl LineChart {
    pub fn new(title: &str, x_label: &str, y_label: &str) -> Self {
        LineChart {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            series: Vec::new(),
            width: 800.0,
            height: 500.0,
        }
    }

    pub fn add_series(&mut self, name: &str, points: Vec<(f64, f64)>) {
        self.series.push(Series {
            name: name.into(),
            points,
        });
    }

    pub fn render(&self) -> Result<String> {
        if self.series.is_empty() || self.series.iter().all(|s| s.points.is_empty()) {
            return Err(Error::usage("nothing to plot: empty curve set"));
        }
        let all = self.series.iter().flat_map(|s| s.points.iter());
        let (mut x0, mut x1, mut y0, mut y1) = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for &(x, y) in all {
            if !(x.is_finite() && y.is_finite()) {
                return Err(Error::domain("cannot plot non-finite values"));
            }
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let xt = Ticks::new(x0, x1);
        let yt = Ticks::new(y0, y1);

        let (left, right, top, bottom) = (80.0, 170.0, 40.0, 60.0);
        let pw = self.width - left - right;
        let ph = self.height - top - bottom;
        let sx = |x: f64| left + (x - xt.lo) / (xt.hi - xt.lo) * pw;
        let sy = |y: f64| top + ph - (y - yt.lo) / (yt.hi - yt.lo) * ph;

        let mut s = String::new();
        let (w, h) = (self.width, self.height);
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#
        )
        .unwrap();
        writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            left + pw / 2.0,
            escape(&self.title)
        )
        .unwrap();

        // grid and tick labels
        s.push_str("<g stroke=\"#dddddd\" stroke-width=\"1\">\n");
        for x in xt.values() {
            writeln!(
                s,
                r#"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}"/>"#,
                sx(x),
                top,
                top + ph
            )
            .unwrap();
        }
        for y in yt.values() {
            writeln!(
                s,
                r#"<line x1="{1:.2}" y1="{0:.2}" x2="{2:.2}" y2="{0:.2}"/>"#,
                sy(y),
                left,
                left + pw
            )
            .unwrap();
        }
        s.push_str("</g>\n<g fill=\"#333333\">\n");
        for x in xt.values() {
            writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                sx(x),
                top + ph + 18.0,
                format_sig(x)
            )
            .unwrap();
        }
        for y in yt.values() {
            writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                left - 6.0,
                sy(y) + 4.0,
                format_sig(y)
            )
            .unwrap();
        }
        s.push_str("</g>\n");
        writeln!(
            s,
            "<rect x=\"{left}\" y=\"{top}\" width=\"{pw:.2}\" height=\"{ph:.2}\" fill=\"none\" stroke=\"#333333\"/>"
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            left + pw / 2.0,
            self.height - 16.0,
            escape(&self.x_label)
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="18" y="{0:.2}" text-anchor="middle" transform="rotate(-90 18 {0:.2})">{1}</text>"#,
            top + ph / 2.0,
            escape(&self.y_label)
        )
        .unwrap();

        for (i, series) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let pts: Vec<String> = series
                .points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            writeln!(
                s,
                r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                pts.join(" ")
            )
            .unwrap();
        }

        // legend
        let lx = left + pw + 14.0;
        for (i, series) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let ly = top + 10.0 + 20.0 * i as f64;
            writeln!(
                s,
                r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="3"/>"#,
                lx + 22.0
            )
            .unwrap();
            writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
                lx + 28.0,
                ly + 4.0,
                escape(&series.name)
            )
            .unwrap();
        }
        s.push_str("</svg>\n");
        Ok(s)
    }
}

/// Axis range widened to whole multiples of a 1/2/5 step.
struct Ticks {
    lo: f64,
    hi: f64,
    step: f64,
}

impl Ticks {
    fn new(min: f64, max: f64) -> Self {
        let (min, max) = if max > min {
            (min, max)
        } else {
            let pad = if min == 0.0 { 1.0 } else { min.abs() * 0.05 };
            (min - pad, max + pad)
        };
        let raw = (max - min) / 6.0;
        let mag = 10f64.powf(raw.log10().floor());
        let step = [1.0, 2.0, 5.0, 10.0]
            .iter()
            .map(|m| m * mag)
            .find(|&s| s >= raw)
            .unwrap_or(10.0 * mag);
        Ticks {
            lo: (min / step).floor() * step,
            hi: (max / step).ceil() * step,
            step,
        }
    }

    fn values(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step).round() as usize;
        (0..=n).map(|i| self.lo + self.step * i as f64).collect()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
