//! Runs the binary on every fixture and pins the JSON report byte for byte.
//! `UPDATE_GOLDEN=1 cargo test -p gradealg-cli --test golden` rewrites the
//! expected files.

use std::path::{Path, PathBuf};
use std::process::Command;

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    fixture: &'static str,
    exit: i32,
}

const CASES: &[Case] = &[
    Case { name: "check_iso_split_square", args: &["check-iso"], fixture: "split_square", exit: 0 },
    Case { name: "check_iso_not_split", args: &["check-iso"], fixture: "not_split", exit: 3 },
    Case { name: "check_iso_cube", args: &["check-iso"], fixture: "cube", exit: 0 },
    Case { name: "check_iso_maximal_ideal", args: &["check-iso"], fixture: "maximal_ideal", exit: 0 },
    Case {
        name: "check_iso_linear_allowed",
        args: &["check-iso", "--allow-linear"],
        fixture: "linear",
        exit: 0,
    },
    Case { name: "presentation_koszul", args: &["presentation"], fixture: "koszul", exit: 0 },
    Case { name: "presentation_not_split", args: &["presentation"], fixture: "not_split", exit: 0 },
    Case { name: "presentation_cube", args: &["presentation"], fixture: "cube", exit: 0 },
    Case { name: "hilbert_split_square", args: &["hilbert"], fixture: "split_square", exit: 0 },
    Case { name: "hilbert_plane_m", args: &["hilbert"], fixture: "plane_m", exit: 0 },
    Case {
        name: "cohomology_two_points",
        args: &["cohomology", "--module", "A"],
        fixture: "two_points",
        exit: 0,
    },
    Case {
        name: "cohomology_line_rees",
        args: &["cohomology", "--module", "R", "--window", "-6:1"],
        fixture: "line",
        exit: 0,
    },
    Case {
        name: "cohomology_plane_rees",
        args: &["cohomology", "--module", "R", "--window", "-8:1"],
        fixture: "plane_x",
        exit: 0,
    },
    Case {
        name: "gencm_simplex_cycle",
        args: &["gencm", "--window", "-4:1"],
        fixture: "simplex_cycle",
        exit: 0,
    },
    Case { name: "gencm_two_points", args: &["gencm", "--window", "-4:1"], fixture: "two_points", exit: 0 },
    Case {
        name: "gencm_simplex_edges",
        args: &["gencm", "--window", "-4:1"],
        fixture: "simplex_edges",
        exit: 3,
    },
    Case { name: "dim_point_edge", args: &["dim"], fixture: "point_edge", exit: 0 },
    Case { name: "dim_two_points", args: &["dim"], fixture: "two_points", exit: 0 },
    Case { name: "dim_rp2_gf2", args: &["dim"], fixture: "rp2_gf2", exit: 0 },
    Case { name: "dim_rp2_q", args: &["dim", "--field", "Q"], fixture: "rp2_gf2", exit: 0 },
];

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn run(args: &[&str], fixture: &str, json: Option<&Path>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gradealg"));
    cmd.args(args).arg("--input").arg(dir("fixtures").join(format!("{fixture}.json")));
    if let Some(p) = json {
        cmd.arg("--json").arg(p);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn golden_reports() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let mut failures = Vec::new();
    for case in CASES {
        let out = tmp.join(format!("{}.json", case.name));
        let (code, _, stderr) = run(case.args, case.fixture, Some(&out));
        assert_eq!(code, case.exit, "{}: {stderr}", case.name);
        let actual = std::fs::read_to_string(&out).unwrap();
        let golden = dir("golden").join(format!("{}.json", case.name));
        if update {
            std::fs::write(&golden, &actual).unwrap();
            continue;
        }
        match std::fs::read_to_string(&golden) {
            Ok(expected) if expected == actual => {}
            Ok(_) => failures.push(format!("{} differs from {}", case.name, golden.display())),
            Err(_) => failures.push(format!("{} has no golden file", case.name)),
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn reports_parse_as_json_and_are_deterministic() {
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    for case in CASES.iter().take(6) {
        let a = tmp.join(format!("{}.a.json", case.name));
        let b = tmp.join(format!("{}.b.json", case.name));
        run(case.args, case.fixture, Some(&a));
        run(case.args, case.fixture, Some(&b));
        let a = std::fs::read_to_string(a).unwrap();
        assert_eq!(a, std::fs::read_to_string(b).unwrap());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["command"], case.args[0]);
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["check-iso"], "linear", None);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("linear form"));
    let (code, _, err) = run(&["hilbert"], "deep_levels", None);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["dim"], "both_j_and_facets", None);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["dim"], "no_such_file", None);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["cohomology", "--module", "R"], "point_edge", None);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["cohomology", "--window", "1:2"], "two_points", None);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["cohomology", "--module", "A"], "split_square", None);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["frobnicate"], "two_points", None);
    assert_eq!(code, 1);
}

#[test]
fn text_output() {
    let (_, text, _) = run(&["cohomology", "--window", "-3:0"], "two_points", None);
    assert!(text.contains("H^1(A) [infinite length] -3:2 -2:2 -1:2 0:1"), "{text}");
    let (_, text, _) = run(&["check-iso", "--allow-linear"], "linear", None);
    assert!(text.starts_with("warning:"));
    let (_, text, _) = run(&["dim", "--json", "-"], "two_points", None);
    assert!(text.contains("\"dim_R\": 2"));
}
