// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn leakage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leakage"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = leakage(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    leakage(args).status.code().unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn golden_sweep() {
    let want = std::fs::read_to_string(golden("sweep_default.csv")).unwrap();
    assert_eq!(stdout(&["sweep"]), want);
}

#[test]
fn golden_fit() {
    let input = golden("sweep_default.csv");
    let got = stdout(&[
        "fit",
        "--input",
        input.to_str().unwrap(),
        "--model",
        "linear",
    ]);
    assert_eq!(
        got,
        std::fs::read_to_string(golden("fit_linear.json")).unwrap()
    );
}

#[test]
fn golden_plot() {
    let want = std::fs::read_to_string(golden("plot_default.svg")).unwrap();
    assert_eq!(stdout(&["plot"]), want);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["compare", "--models", "linear,exp1,exp2,pwl:3"][..],
        &["sweep", "--step-c", "1"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn pleak0_scales_every_power() {
    let a = rows(&stdout(&["sweep", "--step-c", "2"]));
    let b = rows(&stdout(&["sweep", "--step-c", "2", "--pleak0", "0.2"]));
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        let (p, q): (f64, f64) = (x[1].parse().unwrap(), y[1].parse().unwrap());
        assert!((q / p - 2.0).abs() < 1e-10);
    }
}

#[test]
fn short_sweep_includes_both_ends() {
    let r = rows(&stdout(&["sweep", "--start-c", "45", "--stop-c", "45.1"]));
    assert_eq!(r.len(), 2);
    assert_eq!(r[0][0], "318.15");
    assert_eq!(r[1][0], "318.25");
}

#[test]
fn fit_recovers_exact_line() {
    let path = scratch("line.csv");
    let mut csv = String::from("temperature_K,power_W\n");
    for i in 0..20 {
        let t = 300.0 + 2.0 * i as f64;
        csv.push_str(&format!("{t},{}\n", 0.5 + 0.01 * (t - 300.0)));
    }
    std::fs::write(&path, csv).unwrap();
    let json = stdout(&[
        "fit",
        "--input",
        path.to_str().unwrap(),
        "--model",
        "linear",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!((v["params"]["slope"].as_f64().unwrap() - 0.01).abs() < 1e-12);
    assert!(v["training_sse"].as_f64().unwrap() < 1e-18);
}

#[test]
fn fit_exp1_on_calibration_grid_converges() {
    let path = scratch("grid.csv");
    std::fs::write(&path, stdout(&["sweep", "--step-c", "10"])).unwrap();
    let json = stdout(&["fit", "--input", path.to_str().unwrap(), "--model", "exp1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["converged"], serde_json::Value::Bool(true));
    assert_eq!(v["n_samples"].as_u64(), Some(5));
}

#[test]
fn pwl_error_shrinks_with_segments() {
    let r = rows(&stdout(&["compare", "--models", "pwl:1,pwl:3,pwl:5"]));
    let max: Vec<f64> = r.iter().map(|row| row[2].parse().unwrap()).collect();
    assert_eq!(r[1][1], "pwl:3");
    assert!(max[0] >= max[1] && max[1] >= max[2]);
}

#[test]
fn compare_reads_reference_file() {
    let path = scratch("ref.csv");
    std::fs::write(&path, stdout(&["sweep"])).unwrap();
    let r = rows(&stdout(&[
        "compare",
        "--reference",
        path.to_str().unwrap(),
        "--models",
        "bsim",
    ]));
    let max: f64 = r[0][2].parse().unwrap();
    assert!(max < 1e-8);
}

#[test]
fn compare_writes_error_files() {
    let dir = scratch("errors");
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    stdout(&[
        "compare",
        "--models",
        "linear,pwl:3",
        "--errors-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(dir.read_dir().unwrap().count() >= 2);
}

#[test]
fn plots_have_one_polyline_per_series() {
    let svg = stdout(&["plot"]);
    assert_eq!(svg.matches("<polyline").count(), 2);
    let err = stdout(&["plot", "--kind", "error", "--models", "linear,quad"]);
    assert!(err.contains("percent"));
    assert_eq!(err.matches("<polyline").count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["bench", "--runs", "4"]), 2);
    assert_eq!(code(&["bench", "--runs", "12"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["compare", "--models", "nonsense"]), 2);
    assert_eq!(
        code(&[
            "fit",
            "--input",
            "/nonexistent.csv",
            "--model",
            "pwl",
            "--segments",
            "0"
        ]),
        2
    );
    assert_eq!(
        code(&["fit", "--input", "/nonexistent.csv", "--model", "linear"]),
        5
    );
    assert_eq!(code(&["sweep", "--pleak0", "-1"]), 2);

    let bad = scratch("bad.csv");
    std::fs::write(&bad, "temperature_K,power_W\n300,abc\n").unwrap();
    assert_eq!(
        code(&["fit", "--input", bad.to_str().unwrap(), "--model", "linear"]),
        3
    );

    let short = scratch("short.csv");
    std::fs::write(&short, "temperature_K,power_W\n313.15,0.08\n323.15,0.1\n").unwrap();
    assert_eq!(
        code(&[
            "fit",
            "--input",
            short.to_str().unwrap(),
            "--model",
            "cubic"
        ]),
        4
    );
    let other = format!("file:{}", short.display());
    assert_eq!(code(&["compare", "--models", &other]), 4);
}
