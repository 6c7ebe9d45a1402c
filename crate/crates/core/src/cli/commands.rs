// SPDX-License-Identifier: Apache-2.0

//! Argument definitions and the implementation of each command.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::analysis::{
    compare_curves, percent_error_curve_with, ComparisonTable, Curve, ErrorMetric, TemperatureSweep,
};
use crate::bench::{run_suite, validate_runs, TimingReport, DEFAULT_RUNS};
use crate::cli::format::{format_sig, to_json_string};
use crate::cli::plot::LineChart;
use crate::cli::selector::ModelSelector;
use crate::cli::sweep_file::{Quantity, SweepFile};
use crate::error::{Error, Result};
use crate::fitting::{
    fit_exp_model1, fit_exp_model2, linear_fit, poly_fit, pwl_fit, sample_curve,
    taylor_linearize_bsim, training_sse, FitOptions, SamplePoint,
};
use crate::model::{
    AdaptiveLinear, BsimInputs, BsimParams, LeakageModel, LinearizedParams, DEFAULT_THRESHOLD_K,
};
use crate::units::Temperature;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "leakage",
    version,
    about = "Leakage power vs temperature: reference sweeps, model fitting, error and cost comparison"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Write the reference leakage curve over a temperature sweep as CSV.
    Sweep(SweepCmd),
    /// Fit one model family to a sweep CSV and write its parameters as JSON.
    Fit(FitCmd),
    /// Tabulate percent error of models against a reference curve.
    Compare(CompareCmd),
    /// Time per-sweep evaluation of every model family.
    Bench(BenchCmd),
    /// Render power-vs-temperature or error-vs-temperature curves as SVG.
    Plot(PlotCmd),
}

/// Reference device parameters. Defaults reproduce the 45 °C / 0.1 W point.
#[derive(Args, Debug, Clone)]
pub struct BsimFlags {
    /// Gate-source voltage (V).
    #[arg(long, default_value_t = 0.7, allow_hyphen_values = true)]
    pub vgs: f64,
    /// Drain-source voltage (V).
    #[arg(long, default_value_t = 0.7, allow_hyphen_values = true)]
    pub vds: f64,
    /// Threshold voltage at ambient (V).
    #[arg(long, default_value_t = 0.15, allow_hyphen_values = true)]
    pub vth0: f64,
    /// Threshold temperature coefficient (V/K).
    #[arg(long, default_value_t = -0.004, allow_hyphen_values = true)]
    pub vth_coeff: f64,
    /// Subthreshold offset voltage (V).
    #[arg(long, default_value_t = 0.0024, allow_hyphen_values = true)]
    pub voff: f64,
    /// Subthreshold slope factor.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub eta: f64,
    /// Leakage power at ambient (W).
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub pleak0: f64,
    /// Ambient temperature (°C).
    #[arg(long, default_value_t = 45.0, allow_hyphen_values = true)]
    pub tamb_c: f64,
}

impl Default for BsimFlags {
    fn default() -> Self {
        let d = BsimInputs::default();
        BsimFlags {
            vgs: d.v_gs,
            vds: d.v_ds,
            vth0: d.vth0,
            vth_coeff: d.vth_temp_coeff,
            voff: d.v_off,
            eta: d.eta,
            pleak0: d.p_leak0,
            tamb_c: 45.0,
        }
    }
}

impl BsimFlags {
    pub fn params(&self) -> Result<BsimParams> {
        let t_amb = Temperature::from_celsius(self.tamb_c).map_err(as_usage)?;
        BsimParams::new(BsimInputs {
            t_amb: t_amb.kelvin(),
            v_gs: self.vgs,
            v_ds: self.vds,
            vth0: self.vth0,
            vth_temp_coeff: self.vth_coeff,
            v_off: self.voff,
            eta: self.eta,
            p_leak0: self.pleak0,
        })
        .map_err(as_usage)
    }
}

/// Sweep bounds in °C.
#[derive(Args, Debug, Clone)]
pub struct SweepFlags {
    #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
    pub start_c: f64,
    #[arg(long, default_value_t = 80.0, allow_hyphen_values = true)]
    pub stop_c: f64,
    #[arg(long, default_value_t = 0.1)]
    pub step_c: f64,
}

impl SweepFlags {
    pub fn sweep(&self) -> Result<TemperatureSweep> {
        TemperatureSweep::from_celsius(self.start_c, self.stop_c, self.step_c).map_err(as_usage)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PlotKind {
    #[default]
    Power,
    Error,
}

#[derive(Args, Debug, Clone)]
pub struct SweepCmd {
    #[command(flatten)]
    pub bsim: BsimFlags,
    #[command(flatten)]
    pub sweep: SweepFlags,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct FitCmd {
    /// Sweep CSV with the samples to fit.
    #[arg(long)]
    pub input: PathBuf,
    /// linear, quad, cubic, quartic, poly[:N], pwl[:N], exp1 or exp2.
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub segments: Option<usize>,
    #[arg(long, default_value_t = 200)]
    pub max_iterations: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct CompareCmd {
    #[command(flatten)]
    pub bsim: BsimFlags,
    #[command(flatten)]
    pub sweep: SweepFlags,
    /// Reference sweep CSV; the BSIM curve over the sweep flags otherwise.
    #[arg(long)]
    pub reference: Option<PathBuf>,
    /// Comma-separated model selectors.
    #[arg(long, default_value = "linear,quad,cubic")]
    pub models: String,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub segments: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write one pointwise error CSV per model into this directory.
    #[arg(long)]
    pub errors_dir: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct BenchCmd {
    #[command(flatten)]
    pub bsim: BsimFlags,
    #[command(flatten)]
    pub sweep: SweepFlags,
    /// Timed runs per model; odd and at least 11.
    #[arg(long, default_value_t = DEFAULT_RUNS)]
    pub runs: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct PlotCmd {
    #[command(flatten)]
    pub bsim: BsimFlags,
    #[command(flatten)]
    pub sweep: SweepFlags,
    #[arg(long)]
    pub reference: Option<PathBuf>,
    #[arg(long, default_value = "bsim,linear")]
    pub models: String,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub segments: Option<usize>,
    #[arg(long, value_enum, default_value_t = PlotKind::Power)]
    pub kind: PlotKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(config: &RunConfig) -> Result<()> {
    match &config.command {
        Command::Sweep(c) => cmd_sweep(c),
        Command::Fit(c) => cmd_fit(c),
        Command::Compare(c) => cmd_compare(c),
        Command::Bench(c) => cmd_bench(c),
        Command::Plot(c) => cmd_plot(c),
    }
}

fn as_usage(e: Error) -> Error {
    match e {
        Error::Domain(msg) => Error::Usage(msg),
        other => other,
    }
}

/// Fails early when the output's directory does not exist.
fn check_output(out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        let parent = path.parent().filter(|p| !p.as_os_str().is_empty());
        if let Some(dir) = parent {
            if !dir.is_dir() {
                return Err(Error::io(
                    path,
                    std::io::Error::new(std::io::ErrorKind::NotFound, "directory does not exist"),
                ));
            }
        }
        if path.is_dir() {
            return Err(Error::io(
                path,
                std::io::Error::new(std::io::ErrorKind::InvalidInput, "is a directory"),
            ));
        }
    }
    Ok(())
}

fn check_input(path: &Path) -> Result<()> {
    if path.is_file() {
        Ok(())
    } else {
        Err(Error::io(
            path,
            std::io::Error::new(std::io::ErrorKind::NotFound, "input file not found"),
        ))
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Error::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}

pub fn cmd_sweep(c: &SweepCmd) -> Result<()> {
    check_output(c.out.as_deref())?;
    emit(c.out.as_deref(), &sweep_csv(c)?)
}

/// The CSV `sweep` writes.
pub fn sweep_csv(c: &SweepCmd) -> Result<String> {
    let params = c.bsim.params()?;
    let sweep = c.sweep.sweep()?;
    let file = SweepFile {
        quantity: Quantity::PowerW,
        samples: sample_curve(sweep.points(), |t| params.leakage(t)),
    };
    Ok(file.to_csv_string())
}

/// Contents of the fitted-model JSON file.
#[derive(Debug, Clone, Serialize)]
pub struct FittedModelFile {
    pub family: String,
    pub params: Map<String, Value>,
    pub training_sse: f64,
    pub n_samples: usize,
    pub converged: bool,
}

/// A model produced from a selector, plus whether its fit converged.
#[derive(Debug, Clone)]
pub struct BuiltModel {
    pub model: LeakageModel,
    pub converged: bool,
}

/// Everything a selector may need to become a model.
pub struct ModelContext<'a> {
    pub params: &'a BsimParams,
    pub samples: &'a [SamplePoint],
    pub fit_options: FitOptions,
    pub degree: Option<usize>,
    pub segments: Option<usize>,
}

impl ModelContext<'_> {
    pub fn build(&self, selector: &ModelSelector) -> Result<BuiltModel> {
        let closed = |model| {
            Ok(BuiltModel {
                model,
                converged: true,
            })
        };
        let at_celsius = |c: Option<f64>| match c {
            Some(c) => Temperature::from_celsius(c).map_err(as_usage),
            None => Ok(self.params.t_amb()),
        };
        match selector.resolve(self.degree, self.segments)? {
            ModelSelector::Bsim => closed(LeakageModel::Bsim(*self.params)),
            ModelSelector::Linear => closed(LeakageModel::Line(linear_fit(self.samples)?)),
            ModelSelector::Poly(Some(d)) => {
                closed(LeakageModel::Polynomial(poly_fit(self.samples, d)?))
            }
            ModelSelector::Pwl(Some(n)) => {
                closed(LeakageModel::PiecewiseLinear(pwl_fit(self.samples, n)?))
            }
            ModelSelector::Taylor(t) => closed(LeakageModel::Line(taylor_linearize_bsim(
                self.params,
                at_celsius(t)?,
            )?)),
            ModelSelector::Liu(t) => closed(LeakageModel::Linearized(
                LinearizedParams::matched_to_bsim(self.params, at_celsius(t)?),
            )),
            ModelSelector::Exp1 => {
                let f = fit_exp_model1(self.samples, &self.fit_options)?;
                Ok(BuiltModel {
                    model: LeakageModel::ExpModel1(f.params),
                    converged: f.converged,
                })
            }
            ModelSelector::Exp2 => {
                let f = fit_exp_model2(self.samples, &self.fit_options)?;
                Ok(BuiltModel {
                    model: LeakageModel::ExpModel2(f.params),
                    converged: f.converged,
                })
            }
            ModelSelector::Adaptive(th) => closed(LeakageModel::Adaptive(
                AdaptiveLinear::new(
                    *self.params,
                    self.params.t_amb(),
                    th.unwrap_or(DEFAULT_THRESHOLD_K),
                )
                .map_err(as_usage)?,
            )),
            ModelSelector::File(p) => Err(Error::usage(format!(
                "file:{} is data, not a model",
                p.display()
            ))),
            ModelSelector::Poly(None) | ModelSelector::Pwl(None) => {
                unreachable!("resolve fills in counts")
            }
        }
    }

    /// Evaluates a selector at `temps`; `file:` selectors are read as-is.
    pub fn curve(&self, selector: &ModelSelector, temps: &[Temperature]) -> Result<Curve> {
        match selector {
            ModelSelector::File(path) => {
                check_input(path)?;
                SweepFile::read(path)?.to_curve()
            }
            sel => Curve::from_model(&self.build(sel)?.model, temps),
        }
    }
}

/// Parameter map written for a fitted model.
pub fn model_params(model: &LeakageModel) -> Map<String, Value> {
    let mut m = Map::new();
    let mut put = |k: String, v: f64| {
        m.insert(k, Value::from(v));
    };
    match model {
        LeakageModel::Line(l) => {
            put("intercept".into(), l.intercept());
            put("slope".into(), l.slope());
        }
        LeakageModel::Polynomial(p) => {
            put("center_K".into(), p.center());
            put("scale_K".into(), p.scale());
            for (i, c) in p.coefficients().iter().enumerate() {
                put(format!("a{i}"), *c);
            }
        }
        LeakageModel::PiecewiseLinear(p) => {
            for (i, b) in p.breakpoints().iter().enumerate() {
                put(format!("breakpoint{i}_K"), *b);
            }
            for (i, (a, s)) in p.segment_coefficients().into_iter().enumerate() {
                put(format!("segment{i}_intercept"), a);
                put(format!("segment{i}_slope"), s);
            }
        }
        LeakageModel::ExpModel1(p) => {
            put("c0".into(), p.c0);
            put("c1".into(), p.c1);
            put("i_gate".into(), p.i_gate);
        }
        LeakageModel::ExpModel2(p) => {
            put("c0".into(), p.c0);
            put("c1".into(), p.c1);
            put("c2".into(), p.c2);
        }
        LeakageModel::Linearized(p) => {
            put("i_gate".into(), p.i_gate);
            put("a_s".into(), p.a_s);
            put("w_over_l".into(), p.w_over_l);
            put("eta".into(), p.eta);
            put("t_ref_K".into(), p.t_ref);
            put("v_gs".into(), p.v_gs);
            put("v_th".into(), p.v_th);
        }
        LeakageModel::Bsim(p) => {
            put("norm_constant".into(), p.norm_constant());
        }
        LeakageModel::Adaptive(a) => {
            put("t_ref_K".into(), a.initial.t_ref());
            put("threshold_K".into(), a.initial.threshold());
        }
    }
    m
}

pub fn cmd_fit(c: &FitCmd) -> Result<()> {
    fit_selector(c)?;
    check_input(&c.input)?;
    check_output(c.out.as_deref())?;
    emit(c.out.as_deref(), &fit_json(c)?)
}

fn fit_selector(c: &FitCmd) -> Result<ModelSelector> {
    let selector = c
        .model
        .parse::<ModelSelector>()?
        .resolve(c.degree, c.segments)?;
    if !selector.is_fittable() {
        return Err(Error::usage(format!(
            "`{selector}` cannot be fitted; choose linear, quad, cubic, quartic, poly:N, pwl:N, exp1 or exp2"
        )));
    }
    Ok(selector)
}

/// The JSON `fit` writes.
pub fn fit_json(c: &FitCmd) -> Result<String> {
    let selector = fit_selector(c)?;
    let data = SweepFile::read(&c.input)?;
    let params = BsimParams::default();
    let ctx = ModelContext {
        params: &params,
        samples: &data.samples,
        fit_options: FitOptions {
            max_iterations: c.max_iterations,
            tolerance: c.tolerance,
            ..FitOptions::default()
        },
        degree: None,
        segments: None,
    };
    let built = ctx.build(&selector)?;
    let file = FittedModelFile {
        family: built.model.family().to_string(),
        params: model_params(&built.model),
        training_sse: training_sse(&data.samples, |t| built.model.eval(t)),
        n_samples: data.samples.len(),
        converged: built.converged,
    };
    Ok(to_json_string(&file))
}

struct Reference {
    name: String,
    quantity: Quantity,
    curve: Curve,
}

fn load_reference(
    path: Option<&Path>,
    params: &BsimParams,
    sweep: &TemperatureSweep,
) -> Result<Reference> {
    match path {
        Some(p) => {
            check_input(p)?;
            let file = SweepFile::read(p)?;
            Ok(Reference {
                name: p.display().to_string(),
                quantity: file.quantity,
                curve: file.to_curve()?,
            })
        }
        None => Ok(Reference {
            name: "bsim".into(),
            quantity: Quantity::PowerW,
            curve: Curve::from_model(&LeakageModel::Bsim(*params), sweep.points())?,
        }),
    }
}

fn reference_samples(r: &Reference) -> Vec<SamplePoint> {
    r.curve
        .temperatures()
        .iter()
        .zip(r.curve.values())
        .map(|(t, &p)| SamplePoint { t: t.kelvin(), p })
        .collect()
}

fn model_curves(
    selectors: &[(String, ModelSelector)],
    ctx: &ModelContext<'_>,
    temps: &[Temperature],
) -> Result<Vec<(String, Curve)>> {
    selectors
        .iter()
        .map(|(name, s)| {
            let name = name.clone();
            ctx.curve(s, temps)
                .map(|c| (name.clone(), c))
                .map_err(|e| e.in_model(name))
        })
        .collect()
}

pub fn cmd_compare(c: &CompareCmd) -> Result<()> {
    check_output(c.out.as_deref())?;
    if let Some(dir) = &c.errors_dir {
        if !dir.is_dir() {
            return Err(Error::io(
                dir,
                std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    "errors directory does not exist",
                ),
            ));
        }
    }
    let (table, curves, reference) = compare_inner(c)?;
    if let Some(dir) = &c.errors_dir {
        for (name, curve) in &curves {
            let rel = percent_error_curve_with(&reference, curve, ErrorMetric::PointwiseRelative)?;
            let nrm = percent_error_curve_with(&reference, curve, ErrorMetric::NormalizedByMax)?;
            let mut s = String::from("temperature_K,relative_percent,normalized_percent\n");
            for ((t, a), (_, b)) in rel.pointwise.iter().zip(&nrm.pointwise) {
                s.push_str(&format!(
                    "{},{},{}\n",
                    format_sig(*t),
                    format_sig(*a),
                    format_sig(*b)
                ));
            }
            let path = dir.join(format!("{}_error.csv", file_stem(name)));
            fs::write(&path, s).map_err(|e| Error::io(&path, e))?;
        }
    }
    let text = match c.format {
        ReportFormat::Csv => comparison_csv(&table),
        ReportFormat::Json => to_json_string(&table),
    };
    emit(c.out.as_deref(), &text)
}

/// The comparison table `compare` reports.
pub fn compare_table(c: &CompareCmd) -> Result<ComparisonTable> {
    compare_inner(c).map(|(t, _, _)| t)
}

/// Table, per-model curves, reference curve.
type Comparison = (ComparisonTable, Vec<(String, Curve)>, Curve);

fn compare_inner(c: &CompareCmd) -> Result<Comparison> {
    let params = c.bsim.params()?;
    let sweep = c.sweep.sweep()?;
    let selectors = ModelSelector::parse_named_list(&c.models)?;
    let reference = load_reference(c.reference.as_deref(), &params, &sweep)?;
    let samples = reference_samples(&reference);
    let ctx = ModelContext {
        params: &params,
        samples: &samples,
        fit_options: FitOptions::default(),
        degree: c.degree,
        segments: c.segments,
    };
    let curves = model_curves(&selectors, &ctx, reference.curve.temperatures())?;
    let table = compare_curves(&reference.name, &reference.curve, &curves)?;
    Ok((table, curves, reference.curve))
}

pub fn comparison_csv(table: &ComparisonTable) -> String {
    let mut s = String::from(
        "reference,model,max_percent,mean_percent,argmax_K,normalized_max_percent,normalized_mean_percent\n",
    );
    for r in &table.rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_field(&table.reference_name),
            csv_field(&r.model),
            format_sig(r.max_percent),
            format_sig(r.mean_percent),
            format_sig(r.argmax_t),
            format_sig(r.normalized_max_percent),
            format_sig(r.normalized_mean_percent),
        ));
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

#[derive(Debug, Serialize)]
struct HostInfo {
    os: &'static str,
    arch: &'static str,
    clock_resolution_ns: u64,
}

#[derive(Debug, Serialize)]
struct BenchFile<'a> {
    host: HostInfo,
    #[serde(flatten)]
    report: &'a TimingReport,
}

pub fn cmd_bench(c: &BenchCmd) -> Result<()> {
    validate_runs(c.runs)?;
    check_output(c.out.as_deref())?;
    let params = c.bsim.params()?;
    let sweep = c.sweep.sweep()?;
    let report = run_suite(&params, &sweep, c.runs)?;
    emit(c.out.as_deref(), &bench_text(&report, c.format))
}

pub fn bench_text(report: &TimingReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => to_json_string(&BenchFile {
            host: HostInfo {
                os: std::env::consts::OS,
                arch: std::env::consts::ARCH,
                clock_resolution_ns: report.clock_resolution_ns,
            },
            report,
        }),
        ReportFormat::Csv => {
            let mut s = String::from("model,median_ns,runs,sweep_points,checksum\n");
            s.push_str(&format!(
                "baseline,{},{},{},0\n",
                report.baseline_ns, report.runs, report.sweep_points
            ));
            for r in &report.rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.model_name,
                    r.median_ns,
                    r.runs,
                    r.sweep_points,
                    format_sig(r.checksum)
                ));
            }
            s
        }
    }
}

pub fn cmd_plot(c: &PlotCmd) -> Result<()> {
    check_output(c.out.as_deref())?;
    emit(c.out.as_deref(), &plot_svg(c)?)
}

/// The SVG `plot` writes.
pub fn plot_svg(c: &PlotCmd) -> Result<String> {
    let params = c.bsim.params()?;
    let sweep = c.sweep.sweep()?;
    let selectors = ModelSelector::parse_named_list(&c.models)?;
    let reference = load_reference(c.reference.as_deref(), &params, &sweep)?;
    let samples = reference_samples(&reference);
    let ctx = ModelContext {
        params: &params,
        samples: &samples,
        fit_options: FitOptions::default(),
        degree: c.degree,
        segments: c.segments,
    };
    let curves = model_curves(&selectors, &ctx, reference.curve.temperatures())?;
    let xy = |curve: &Curve| -> Vec<(f64, f64)> {
        curve
            .temperatures()
            .iter()
            .map(|t| t.kelvin())
            .zip(curve.values().iter().copied())
            .collect()
    };

    let chart = match c.kind {
        PlotKind::Power => {
            let y_label = match reference.quantity {
                Quantity::PowerW => "Leakage power (W)",
                Quantity::CurrentA => "Leakage current (A)",
            };
            let mut chart = LineChart::new("Leakage vs temperature", "Temperature (K)", y_label);
            if c.reference.is_some() {
                chart.add_series("reference", xy(&reference.curve));
            }
            for (name, curve) in &curves {
                chart.add_series(name, xy(curve));
            }
            chart
        }
        PlotKind::Error => {
            let mut chart = LineChart::new(
                &format!("Error against {}", reference.name),
                "Temperature (K)",
                "Error (percent)",
            );
            for (name, curve) in &curves {
                let report = percent_error_curve_with(
                    &reference.curve,
                    curve,
                    ErrorMetric::PointwiseRelative,
                )
                .map_err(|e| e.in_model(name))?;
                chart.add_series(name, report.pointwise);
            }
            chart
        }
    };
    chart.render()
}
