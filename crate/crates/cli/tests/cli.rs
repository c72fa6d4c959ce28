use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fwkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fwkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stderr);
    assert_eq!(text.trim_end().lines().count(), 1, "{text}");
    serde_json::from_str(text.trim()).unwrap()
}

const SQUARE: &str = r#"{"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}"#;

#[test]
fn unit_square_center() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let out = fwkit(&[
        "fw-center",
        "--input",
        sq.to_str().unwrap(),
        "--method",
        "exact",
        "--tol",
        "1e-7",
    ]);
    let v = stdout_json(&out);
    let c = v["center"].as_array().unwrap();
    assert!((c[0].as_f64().unwrap() - 0.5).abs() < 1e-6);
    assert!((c[1].as_f64().unwrap() - 0.5).abs() < 1e-6);
    assert_eq!(v["method"], "Exact");

    for method in ["grid", "sed"] {
        let v = stdout_json(&fwkit(&[
            "fw-center",
            "--input",
            sq.to_str().unwrap(),
            "--method",
            method,
        ]));
        assert!(v["mu_star"].as_f64().unwrap() <= 1.1 * 0.3825978582321064);
    }
}

#[test]
fn ratio_and_moments() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let v = stdout_json(&fwkit(&["ratio", "--input", sq.to_str().unwrap()]));
    let r = v["ratio"].as_f64().unwrap();
    assert!(r > 1.0 / 6.0 && r < 0.3490);
    assert_eq!(v["delta"].as_f64().unwrap(), 2f64.sqrt());

    let v = stdout_json(&fwkit(&[
        "moments",
        "--input",
        sq.to_str().unwrap(),
        "--point",
        "0,0",
    ]));
    assert!((v["mean"].as_f64().unwrap() - 0.7651957164642127).abs() < 1e-12);
    let v = stdout_json(&fwkit(&[
        "moments",
        "--input",
        sq.to_str().unwrap(),
        "--point",
        "0.5,0.5",
        "--kappa",
        "2",
    ]));
    assert!((v["mean"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-9);
}

#[test]
fn constants_are_listed() {
    let v = stdout_json(&fwkit(&["constants"]));
    for key in [
        "old_lb_ratio",
        "c1_lb_ratio",
        "square_vertex_mean",
        "final_ratio",
        "c2_upper",
        "case2_bound",
        "z0",
        "sed_approx_ratio",
    ] {
        assert!(v[key].is_f64(), "{key}");
    }
    assert!((v["c2_upper"].as_f64().unwrap() - 0.348899).abs() < 1e-4);
}

#[test]
fn symmetrize_round_trips() {
    let dir = TempDir::new().unwrap();
    let tri = write(
        dir.path(),
        "tri.json",
        r#"{"vertices": [[0, 0], [3, 0], [0.5, 2]]}"#,
    );
    for extra in [
        vec![],
        vec!["--axis", "0,0,1,0"],
        vec!["--axis", "-1,0.5,1,-2"],
    ] {
        let mut args = vec!["symmetrize", "--input", tri.to_str().unwrap()];
        args.extend(extra);
        let out = fwkit(&args);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let again = write(
            dir.path(),
            "sym.json",
            std::str::from_utf8(&out.stdout).unwrap(),
        );
        let back = fwkit(&["fw-center", "--input", again.to_str().unwrap()]);
        assert!(back.status.success());
        let poly = fwkit::io::read_polygon(&again).unwrap();
        assert!((poly.area() - 3.0).abs() < 1e-10);
    }
}

#[test]
fn sweep_is_deterministic() {
    let a = fwkit(&[
        "sweep",
        "--kind",
        "random-hull",
        "--count",
        "8",
        "--seed",
        "11",
    ]);
    let b = fwkit(&[
        "sweep",
        "--kind",
        "random-hull",
        "--count",
        "8",
        "--seed",
        "11",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_fwkit"))
        .args([
            "sweep",
            "--kind",
            "random-hull",
            "--count",
            "8",
            "--seed",
            "11",
        ])
        .env("FWKIT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn rhombus_sweep_csv() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("r.csv");
    let out = fwkit(&[
        "sweep",
        "--kind",
        "rhombus",
        "--count",
        "6",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "body_id,delta,R,mu_star,ratio,symmetric,worst_margin"
    );
    let ratios: Vec<f64> = lines
        .map(|l| l.split(',').nth(4).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ratios.len(), 6);
    assert!(ratios.windows(2).all(|w| w[1] < w[0]));
    assert!(ratios.iter().all(|&r| r > 1.0 / 6.0));
}

#[test]
fn verify_report() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let v = stdout_json(&fwkit(&["verify", "--input", sq.to_str().unwrap()]));
    assert_eq!(v["body_id"], "square");
    assert_eq!(v["symmetric"], true);
    assert!(v["checks"]
        .as_object()
        .unwrap()
        .values()
        .all(|c| c["pass"] == true));
}

#[test]
fn parse_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let bad_field = write(dir.path(), "a.json", r#"{"verts": [[0, 0]]}"#);
    let short = write(dir.path(), "b.json", r#"{"vertices": [[0, 0], [1, 0]]}"#);
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (
            vec!["fw-center", "--input", bad_field.to_str().unwrap()],
            "verts",
        ),
        (
            vec!["fw-center", "--input", short.to_str().unwrap()],
            "vertices",
        ),
        (vec!["fw-center", "--input", "/nonexistent/p.json"], "input"),
        (
            vec![
                "fw-center",
                "--input",
                short.to_str().unwrap(),
                "--eps",
                "abc",
            ],
            "--eps",
        ),
        (
            vec![
                "moments",
                "--input",
                short.to_str().unwrap(),
                "--point",
                "1",
            ],
            "--point",
        ),
        (vec!["sweep", "--kind", "blob"], "--kind"),
    ];
    for (args, field) in cases {
        let out = fwkit(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let e = stderr_json(&out);
        assert_eq!(e["error"], "parse");
        assert!(
            e["detail"].as_str().unwrap().contains(field),
            "{args:?}: {e}"
        );
    }
}

#[test]
fn infeasible_config_exits_2() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let sq = sq.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "fw-center",
            "--input",
            sq,
            "--method",
            "grid",
            "--eps",
            "1.5",
        ],
        vec!["fw-center", "--input", sq, "--tol", "0"],
        vec!["moments", "--input", sq, "--point", "0,0", "--kappa", "0.5"],
        vec!["symmetrize", "--input", sq, "--axis", "0,0,0,0"],
        vec!["fw-center", "--input", sq, "--format", "csv"],
    ];
    for args in cases {
        let out = fwkit(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_json(&out)["error"], "infeasible");
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let out = fwkit(&[
        "fw-center",
        "--input",
        sq.to_str().unwrap(),
        "--budget",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_json(&out)["error"], "non_convergence");
    let out = fwkit(&["ratio", "--input", sq.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
}
