//! End-to-end tests of the `modesum` binary: exit codes, CSV stability,
//! config round trip.

use std::io::Write;
use std::process::{Command, Output};

fn modesum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modesum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn decompose_gold_like_prints_table() {
    let out = modesum(&[
        "decompose",
        "--omega-p",
        "1.37e16",
        "--gamma",
        "1.37e13",
        "--distance-ratio",
        "0.05",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("ideal Casimir"));
    assert!(text.contains("Lifshitz total"));
    assert!(text.contains("surface plasmons"));
    assert!(text.contains("eddy currents TE"));
    assert!(text.contains("propagating + remainder"));
}

#[test]
fn decompose_plasma_flags_no_cut() {
    let out = modesum(&[
        "decompose",
        "--omega-p",
        "9eV",
        "--model",
        "plasma",
        "--distance-ratio",
        "1.0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // eddy rows print exact zero with the no-cut flag
    assert!(text.contains("no cut"));
    for line in text.lines().filter(|l| l.contains("eddy currents")) {
        assert!(line.contains("+0.000000e0"), "eddy row should be exactly zero: {line}");
    }
}

#[test]
fn missing_distance_is_usage_error() {
    let out = modesum(&["decompose", "--omega-p", "1.37e16"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--distance"), "error must name the missing field: {err}");
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = modesum(&["decompose", "--does-not-exist", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_lambda_csv_is_stable_and_ordered() {
    let args = [
        "sweep",
        "--omega-p",
        "1.37e16",
        "--gamma",
        "1.37e14",
        "--distance-ratio",
        "0.1",
        "--param",
        "lambda",
        "--grid",
        "log:1:100:4",
        "--jobs",
        "2",
    ];
    let out = modesum(&args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "param_value,E_ideal,E_total,E_total_TE,E_total_TM,E_plasmon,E_plasmon_asym,\
         E_eddy_TE,E_eddy_TM,F_eddy_TE_highT,F_plasma_TE_highT,eta_total,tol_achieved,error_flag"
            .replace(' ', "")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    // grid order is preserved and values are 17-significant-digit decimals
    let first: f64 = rows[0].split(',').next().unwrap().parse().unwrap();
    let last: f64 = rows[3].split(',').next().unwrap().parse().unwrap();
    assert_eq!(first, 1.0);
    assert_eq!(last, 100.0);

    // deterministic under concurrency: byte-identical rerun
    let again = stdout(&modesum(&args));
    assert_eq!(text, again);

    // eddy column varies logarithmically with the cutoff: equal increments
    // per decade (columns: 7 = E_eddy_TE)
    let eddy: Vec<f64> =
        rows.iter().map(|r| r.split(',').nth(7).unwrap().parse().unwrap()).collect();
    let d1 = eddy[1] - eddy[0];
    let d2 = eddy[2] - eddy[1];
    let d3 = eddy[3] - eddy[2];
    assert!((d2 / d1 - 1.0).abs() < 1e-6);
    assert!((d3 / d2 - 1.0).abs() < 1e-6);
}

#[test]
fn sweep_plasmon_column_is_cutoff_independent() {
    let out = modesum(&[
        "sweep",
        "--omega-p",
        "1.37e16",
        "--gamma",
        "1.37e14",
        "--distance-ratio",
        "0.1",
        "--param",
        "lambda",
        "--grid",
        "log:1:100:3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let plasmon: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|r| r.split(',').nth(5).unwrap().parse().unwrap())
        .collect();
    let spread = (plasmon.iter().cloned().fold(f64::MIN, f64::max)
        - plasmon.iter().cloned().fold(f64::MAX, f64::min))
        / plasmon[0].abs();
    assert!(spread.abs() < 1e-6, "plasmon column spread {spread:e}");
}

#[test]
fn config_file_round_trip_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(
        f,
        "[material]\nomega_p_rad_s = 1.37e16\ngamma_rad_s = 1.37e13\nmodel = drude\n\
         [geometry]\ndistance_ratio = 5.0e-2\n[cutoff]\nlambda_over_gamma = 10.0"
    )
    .unwrap();
    drop(f);

    let out = modesum(&["decompose", "--config", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let base = stdout(&out);
    assert!(base.contains("L/lambda_p = 5.0"));

    // flags override the file
    let out = modesum(&[
        "decompose",
        "--config",
        path.to_str().unwrap(),
        "--distance-ratio",
        "0.1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("L/lambda_p = 1.0"));
}

#[test]
fn bad_config_key_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.conf");
    std::fs::write(&path, "[material]\nomega = 1\n").unwrap();
    let out = modesum(&["decompose", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_perfect_mirror_passes() {
    let out = modesum(&["check", "perfect-mirror"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(text.contains("tolerance"));
}

#[test]
fn check_sum_rule_passes() {
    let out = modesum(&["check", "sum-rule"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn check_unknown_name_is_usage_error() {
    let out = modesum(&["check", "not-a-check"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_bad_grid_is_usage_error() {
    let out = modesum(&[
        "sweep",
        "--distance-ratio",
        "1",
        "--param",
        "t",
        "--grid",
        "log:-1:10:5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.txt");
    let out = modesum(&[
        "decompose",
        "--model",
        "plasma",
        "--distance-ratio",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let from_file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(from_file, stdout(&out));
}
