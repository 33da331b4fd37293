//! Black-box tests of the binary: pinned output bytes, exit codes, and
//! thread/environment handling.

use std::process::{Command, Output};

fn sphere_weyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphere-weyl"))
        .args(args)
        .env_remove("SPHERE_WEYL_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = sphere_weyl(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

fn exit_code(args: &[&str]) -> i32 {
    sphere_weyl(args).status.code().expect("exit code")
}

#[test]
fn scan_csv_golden_s2() {
    let expected = "\
n,k,v_k,mult,N,w,sign_node,sign_next,crossing_mid
2,0,0,1,1,0.000000,-1,-1,1.000000
2,1,2,3,4,2.000000,-1,-1,4.000000
2,2,6,5,9,6.000000,-1,-1,9.000000
2,3,12,7,16,12.000000,-1,-1,16.000000
";
    assert_eq!(
        stdout_of(&["scan", "--dim", "2", "--kmax", "3", "--format", "csv"]),
        expected
    );
}

#[test]
fn scan_json_shape() {
    let text = stdout_of(&["scan", "--dim", "3", "--kmax", "2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let rows = rows.as_array().expect("array of rows");
    assert_eq!(rows.len(), 3);
    let row = &rows[1];
    assert_eq!(row["n"], 3);
    assert_eq!(row["k"], 1);
    assert_eq!(row["v_k"], "3");
    assert_eq!(row["mult"], "4");
    assert_eq!(row["N"], "5");
    assert_eq!(row["sign_node"], -1);
    assert_eq!(row["sign_next"], -1);
    assert!(row["crossing_mid"].is_string());
}

#[test]
fn regime_json_golden_s15() {
    let text = stdout_of(&["regime", "--dim", "15", "--scan-limit", "200"]);
    let report: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(report["dim"], 15);
    assert_eq!(report["scan_limit"], 200);
    let exceptional: Vec<u64> = report["exceptional_set"]
        .as_array()
        .expect("array")
        .iter()
        .map(|v| v.as_u64().expect("integer"))
        .collect();
    assert_eq!(exceptional, (0..=25).collect::<Vec<u64>>());
    assert_eq!(report["stable_threshold"], 26);
    assert_eq!(report["paper_bound"], 42);
    // Key order is part of the pinned interface.
    let dim_pos = text.find("\"dim\"").unwrap();
    let set_pos = text.find("\"exceptional_set\"").unwrap();
    let threshold_pos = text.find("\"stable_threshold\"").unwrap();
    let bound_pos = text.find("\"paper_bound\"").unwrap();
    assert!(dim_pos < set_pos && set_pos < threshold_pos && threshold_pos < bound_pos);
}

#[test]
fn regime_small_dims_have_empty_exceptional_set() {
    for dim in ["1", "2", "3", "4"] {
        let text = stdout_of(&["regime", "--dim", dim, "--scan-limit", "50"]);
        let report: serde_json::Value = serde_json::from_str(&text).expect("valid json");
        assert_eq!(report["exceptional_set"].as_array().unwrap().len(), 0);
        assert_eq!(report["stable_threshold"], 0);
    }
}

#[test]
fn box_text_golden_unit_square() {
    let expected = "\
box: sides = [1, 1], dim = 2, volume = 1
levels with q <= 10: 4 distinct
q = 2\tN = 1\tw = 1.570796\tN < w
q = 5\tN = 3\tw = 3.926991\tN < w
q = 8\tN = 4\tw = 6.283185\tN < w
q = 10\tN = 6\tw = 7.853982\tN < w
verdict: every node satisfies N <= w: true
strict inequality at every node: true
";
    assert_eq!(
        stdout_of(&["box", "--sides", "1,1", "--qmax", "10"]),
        expected
    );
}

#[test]
fn box_interval_nodes_sit_exactly_on_weyl() {
    let text = stdout_of(&["box", "--sides", "1", "--qmax", "25", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(report["dim"], 1);
    assert_eq!(report["verdict"], true);
    assert_eq!(report["all_strictly_below"], false);
    for node in report["nodes"].as_array().expect("nodes") {
        assert_eq!(node["sign"], 0);
    }
}

#[test]
fn box_rational_sides_accept_decimal_and_fraction() {
    let a = stdout_of(&[
        "box", "--sides", "1/2,2", "--qmax", "30", "--format", "json",
    ]);
    let b = stdout_of(&[
        "box", "--sides", "0.5,2", "--qmax", "30", "--format", "json",
    ]);
    assert_eq!(a, b);
}

#[test]
fn geometry_check_lists_each_dimension() {
    let text = stdout_of(&["geometry-check", "--dim", "4"]);
    assert!(text.contains("dim 3: ok  omega = 4/3 * pi, s = 2 * pi^2"));
    assert!(text.ends_with("5 of 5 product identities hold\n"));
}

#[test]
fn out_flag_matches_stdout_bytes() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("scan.csv");
    let streamed = stdout_of(&["scan", "--dim", "5", "--kmax", "12", "--format", "csv"]);
    let status = sphere_weyl(&[
        "scan",
        "--dim",
        "5",
        "--kmax",
        "12",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(streamed, written);
}

#[test]
fn repeat_runs_are_byte_identical() {
    let args = ["scan", "--dim", "15", "--kmax", "40", "--format", "json"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn threads_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_sphere-weyl"))
        .args(["scan", "--dim", "6", "--kmax", "30", "--format", "csv"])
        .env("SPHERE_WEYL_THREADS", "3")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let baseline = stdout_of(&["scan", "--dim", "6", "--kmax", "30", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), baseline);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["scan", "--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(exit_code(&["scan", "--dim", "0", "--kmax", "3"]), 1);
    assert_eq!(exit_code(&["scan", "--kmax", "3"]), 1);
    assert_eq!(
        exit_code(&["scan", "--dim", "2", "--kmax", "3", "--tol", "0"]),
        1
    );
    assert_eq!(
        exit_code(&["scan", "--dim", "2", "--kmax", "3", "--tol", "abc"]),
        1
    );
    assert_eq!(
        exit_code(&["regime", "--dim", "15", "--scan-limit", "10"]),
        1
    );
    assert_eq!(exit_code(&["box", "--sides", "1,0", "--qmax", "10"]), 1);
    assert_eq!(exit_code(&["no-such-command"]), 1);
}

#[test]
fn io_errors_exit_two() {
    assert_eq!(
        exit_code(&[
            "scan",
            "--dim",
            "2",
            "--kmax",
            "3",
            "--out",
            "/nonexistent-dir/deep/scan.csv",
        ]),
        2
    );
}

#[test]
fn budget_errors_exit_three() {
    assert_eq!(
        exit_code(&["box", "--sides", "1,1", "--qmax", "10000", "--budget", "10"]),
        3
    );
}
