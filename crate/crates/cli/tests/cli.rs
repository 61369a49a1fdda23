use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn diskpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diskpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn measure_reuleaux_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.json");
    let h = 3f64.sqrt() / 6.0;
    fs::write(
        &path,
        format!(
            r#"{{"centers": [[0, {}], [-0.5, {}], [0.5, {}]]}}"#,
            2.0 * h,
            -h,
            -h
        ),
    )
    .unwrap();
    let out = diskpoly(&["measure", "--centers", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let report = &v["report"];
    let area = report["area"].as_f64().unwrap();
    assert!((area - 0.5 * (std::f64::consts::PI - 3f64.sqrt())).abs() < 1e-9);
    assert!((report["minimal_width"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn dual_of_lens_accepts_bare_array() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lens.json");
    fs::write(&path, "[[-0.5, 0], [0.5, 0]]").unwrap();
    let out = diskpoly(&["dual", "--centers", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dual_centers"].as_array().unwrap().len(), 2);
    let diam = v["dual"]["report"]["diameter"].as_f64().unwrap();
    assert!((diam - 1.0).abs() < 1e-9);
}

#[test]
fn forms_sweep_has_decreasing_width() {
    let out = diskpoly(&["forms"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("d,inradius,width,area,perimeter,dual_diameter,case1_bound")
    );
    let widths: Vec<f64> = lines
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(widths.len(), 8);
    assert!(widths.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn forms_rejects_grid_straddling_one() {
    let out = diskpoly(&["forms", "--d-min", "0.5", "--d-max", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "usage");
}

#[test]
fn verify_is_deterministic_and_writes_results() {
    let dir = tempfile::tempdir().unwrap();
    let lines = dir.path().join("results.jsonl");
    let args = ["verify", "--d", "1.3", "--instances", "30", "--seed", "4"];
    let a = diskpoly(&args);
    let b = diskpoly(&[&args[..], &["--results", lines.to_str().unwrap()]].concat());
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["summary"]["theorem1_area"]["count"], 30);
    let written = fs::read_to_string(&lines).unwrap();
    assert_eq!(written.lines().count(), 30 * 8);
}

#[test]
fn search_respects_floor() {
    let out = diskpoly(&[
        "search",
        "--d",
        "1.2",
        "--restarts",
        "4",
        "--steps",
        "400",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let best = v["best_area"].as_f64().unwrap();
    let floor = v["floor"].as_f64().unwrap();
    assert!(best >= floor - 1e-7);
}

#[test]
fn probe_reports_open_status() {
    let out = diskpoly(&["probe", "--d", "1.0", "--restarts", "2", "--steps", "100"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["reference_kind"], "regular_triangle");
    assert!(v["status"].as_str().unwrap().contains("open problem"));
}

#[test]
fn errors_are_machine_readable() {
    let out = diskpoly(&["verify", "--d", "2.0", "--instances", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "d_out_of_range");

    let out = diskpoly(&["measure", "--centers", "/nonexistent/centers.json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "io");
}
