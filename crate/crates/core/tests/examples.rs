// SPDX-License-Identifier: Apache-2.0

//! Runs every example so they cannot rot.

mod bsim_reference {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/bsim_reference.rs"
    ));
}

mod fit_families {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/fit_families.rs"
    ));
}

mod piecewise_segments {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/piecewise_segments.rs"
    ));
}

mod adaptive_reference {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/adaptive_reference.rs"
    ));
}

mod error_comparison {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/error_comparison.rs"
    ));
}

mod timing_suite {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/timing_suite.rs"
    ));
}

mod plot_svg {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/plot_svg.rs"));
}

mod ingest_csv {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/ingest_csv.rs"
    ));
}

#[test]
fn bsim_reference_runs() {
    bsim_reference::run_example().expect("bsim reference example should run");
}

#[test]
fn fit_families_runs() {
    fit_families::run_example().expect("fit families example should run");
}

#[test]
fn piecewise_segments_runs() {
    piecewise_segments::run_example().expect("piecewise segments example should run");
}

#[test]
fn adaptive_reference_runs() {
    adaptive_reference::run_example().expect("adaptive reference example should run");
}

#[test]
fn error_comparison_runs() {
    error_comparison::run_example().expect("error comparison example should run");
}

#[test]
fn timing_suite_runs() {
    timing_suite::run_example().expect("timing suite example should run");
}

#[test]
fn plot_svg_runs() {
    plot_svg::run_example().expect("plot svg example should run");
}

#[test]
fn ingest_csv_runs() {
    ingest_csv::run_example().expect("ingest csv example should run");
}
