use std::process::{Command, Output};

use serde_json::Value;
use soergel::coxeter::{CoxeterSystem, GenSet};
use soergel::hecke::Hecke;
use soergel::laurent::LaurentPoly;
use soergel::parabolic::ParabolicModule;
use soergel::verify::{check_inversion, Suite};

fn soergel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soergel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = soergel(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn golden_a1_kl_table() {
    assert_eq!(
        stdout(&["--type", "A1", "kl-table"]),
        "y\tx\th\nid\tid\t1*v^0\nid\ts1\t1*v^1\ns1\ts1\t1*v^0\n"
    );
}

#[test]
fn golden_rouquier_shape_a1() {
    assert_eq!(
        stdout(&["--type", "A1", "rouquier-shape", "s1"]),
        "0\tB[s1](0)^1\n1\tB[id](1)^1\n"
    );
    assert_eq!(
        stdout(&["--type", "A1", "rouquier-shape", "s1", "--kind", "e"]),
        "-1\tB[id](-1)^1\n0\tB[s1](0)^1\n"
    );
}

#[test]
fn golden_hom_rank_a1() {
    assert_eq!(
        stdout(&["--type", "A1", "hom-rank", "s1", "s1"]),
        "x\ty\trank\ns1\ts1\t1*v^0 + 1*v^2\n"
    );
}

#[test]
fn golden_example_a3() {
    assert_eq!(
        stdout(&["example-a3"]),
        "id\t1*v^-1 + 1*v^1\ns3\t1*v^0\ns1.s2.s3\t1*v^0\nverdict\tnot perverse\n"
    );
    // the same computation through the generic subcommand
    assert_eq!(
        stdout(&["--type", "A3", "--subset", "s1,s2", "bs-char", "s1.s2.s3"]),
        stdout(&["example-a3"])
    );
}

#[test]
fn dihedral_table_is_monomial() {
    let text = stdout(&["--type", "I2(5)", "kl-table"]);
    let sys = CoxeterSystem::named("I2(5)").unwrap();
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split('\t').collect();
        let (y, x) = (
            sys.parse_element(cols[0]).unwrap(),
            sys.parse_element(cols[1]).unwrap(),
        );
        let gap = sys.length(x) - sys.length(y);
        assert_eq!(cols[2], format!("1*v^{gap}"));
        rows += 1;
    }
    // one row per comparable pair
    assert_eq!(
        rows,
        sys.elements()
            .map(|x| sys.elements().filter(|&y| sys.bruhat_leq(y, x)).count())
            .sum::<usize>()
    );
}

#[test]
fn json_parses_back() {
    let text = stdout(&[
        "--type",
        "A3",
        "--subset",
        "s2",
        "--format",
        "json",
        "parabolic-table",
    ]);
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["subset"], serde_json::json!(["s2"]));
    let sys = CoxeterSystem::named("A3").unwrap();
    let hk = Hecke::new(&sys);
    let m = ParabolicModule::new(&hk, sys.parse_subset("s2").unwrap());
    let rows = value["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        let y = sys.parse_element(row["y"].as_str().unwrap()).unwrap();
        let x = sys.parse_element(row["x"].as_str().unwrap()).unwrap();
        let h = LaurentPoly::from_json(&row["h"]).unwrap();
        assert_eq!(h, m.parabolic_kl_poly(y, x));
    }

    let inv: Value = serde_json::from_str(&stdout(&[
        "--type",
        "B2",
        "--format",
        "json",
        "inverse-table",
    ]))
    .unwrap();
    assert!(inv["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["x"].is_string() && r["g"].is_array()));

    let shape: Value = serde_json::from_str(&stdout(&[
        "--type",
        "A1",
        "--format",
        "json",
        "rouquier-shape",
        "s1",
    ]))
    .unwrap();
    assert_eq!(shape["degrees"][1]["terms"][0]["word"], "id");

    let ex: Value = serde_json::from_str(&stdout(&["--format", "json", "example-a3"])).unwrap();
    assert_eq!(ex["verdict"], "not perverse");
    assert_eq!(ex["subset"], serde_json::json!(["s1", "s2"]));

    let report: Value =
        serde_json::from_str(&stdout(&["--type", "A2", "--format", "json", "verify"])).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), Suite::ALL.len());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--type", "B3", "--subset", "s1,s3", "inverse-table"][..],
        &["--type", "A3", "kl-table", "--format", "json"],
        &["--type", "B3", "verify", "--suite", "bs-positivity"],
    ] {
        assert_eq!(soergel(args).stdout, soergel(args).stdout, "{args:?}");
    }
}

#[test]
fn matrix_file_input() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("b3.cox");
    std::fs::write(&path, "3\n3 2\n4\n").unwrap();
    let from_file = stdout(&[
        "--matrix",
        path.to_str().unwrap(),
        "--subset",
        "s2",
        "parabolic-table",
    ]);
    // B3 with the 4-bond between s2 and s3, as in the named type
    assert_eq!(
        from_file,
        stdout(&["--type", "B3", "--subset", "s2", "parabolic-table"])
    );
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| soergel(args).status.code().unwrap();
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["--type", "A3", "verify"]), 0);
    assert_eq!(code(&["kl-table"]), 2);
    assert_eq!(code(&["--type", "A3", "frobnicate"]), 2);
    assert_eq!(code(&["--type", "A3", "--subset", "s7", "kl-table"]), 2);
    assert_eq!(code(&["--type", "A3", "--cap", "10", "kl-table"]), 2);
    assert_eq!(
        code(&["--type", "A3", "--subset", "s1", "hom-rank", "s1", "id"]),
        2
    );
    assert_eq!(code(&["--matrix", "/nonexistent/file", "kl-table"]), 2);
    // H3 has a 5-bond, which has no crystallographic realization
    let out = soergel(&["--type", "H3", "kl-table"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error: "));
}

#[test]
fn verify_passes_on_a3_and_b3() {
    for name in ["A3", "B3"] {
        let out = soergel(&["--type", name, "verify"]);
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(out.status.code(), Some(0), "{text}");
        assert_eq!(
            text.lines().filter(|l| l.starts_with("PASS")).count(),
            Suite::ALL.len()
        );
        assert!(text.ends_with("summary\t12 suites\t0 failed\n"));
    }
}

#[test]
fn corrupted_cache_fails_inversion() {
    let sys = CoxeterSystem::named("A3").unwrap();
    let hk = Hecke::new(&sys);
    let mut m = ParabolicModule::new(&hk, GenSet::from_bits(0b001));
    let (y, x) = (sys.identity(), sys.parse_element("s1.s2").unwrap());
    m.inject_h_fault(y, x, LaurentPoly::v_pow(3));
    let report = check_inversion(&m);
    assert!(report.failed > 0);
    let first = report.first_counterexample.unwrap();
    assert!(first.starts_with("I={s1}"), "{first}");
}
