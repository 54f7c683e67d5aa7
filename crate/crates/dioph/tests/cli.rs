//! End-to-end tests of the `dioph` binary: exit codes, stdin handling, data
//! root resolution, and JSON output conformance to the shipped schemas.

mod common;

use common::{data_dir, run_cli, run_cli_env, run_cli_stdin, SchemaStore};
use serde_json::Value;

fn data_arg() -> String {
    data_dir().to_str().unwrap().to_string()
}

#[test]
fn json_outputs_match_schemas() {
    let store = SchemaStore::load();
    let data = data_arg();
    let v5 = data_dir().join("versions/v5.jsonl");
    let v6 = data_dir().join("versions/v6.jsonl");
    let v5 = v5.to_str().unwrap();
    let v6 = v6.to_str().unwrap();
    // One invocation per subcommand; expected exit code alongside.
    let cases: Vec<(&str, Vec<&str>, i32)> = vec![
        (
            "size.schema.json",
            vec!["--json", "size", "x^2+y^2+z*t+1=0", "3*x^3-2=0"],
            0,
        ),
        (
            "length.schema.json",
            vec!["--json", "length", "x^3+y^3+z^3=3", "x^4+x*y+y^3+1=0"],
            0,
        ),
        (
            "canon.schema.json",
            vec!["--json", "canon", "2*y*z=-2*x^3-2"],
            0,
        ),
        (
            "equiv.schema.json",
            vec!["--json", "equiv", "x^3+y*z+1=0", "y^3-x*z-1=0"],
            0,
        ),
        (
            "classify.schema.json",
            vec!["--json", "classify", "x^3+y^3+z^3=3", "x^2+y^2+z*t+1=0"],
            0,
        ),
        (
            "enumerate.schema.json",
            vec!["--json", "enumerate", "--h-max", "8", "--counts"],
            0,
        ),
        (
            "enumerate.schema.json",
            vec!["--json", "enumerate", "--h-max", "8"],
            0,
        ),
        (
            "search.schema.json",
            vec!["--json", "search", "x^3+y^3+z^3=3", "--bound", "5"],
            0,
        ),
        (
            "verify.schema.json",
            vec!["--json", "verify", "x^3+y^3+z^3=3", "1,1,1", "4,4,-5"],
            0,
        ),
        (
            "family.schema.json",
            vec![
                "--json",
                "family",
                "x^3+y^3+z^3=2",
                "--component",
                "1+6*u^3",
                "--component",
                "-6*u^2",
                "--component",
                "1-6*u^3",
                "--member",
                "1",
                "--covers",
                "1,0,1",
            ],
            0,
        ),
        (
            "obstruct.schema.json",
            vec!["--json", "obstruct", "x^2+y^2=3"],
            0,
        ),
        (
            "catalog-verify.schema.json",
            vec!["--json", "catalog-verify", "--data", &data],
            0,
        ),
        (
            "catalog-report.schema.json",
            vec!["--json", "catalog-report", "--data", &data],
            0,
        ),
        (
            "catalog-diff.schema.json",
            vec!["--json", "catalog-diff", v5, v6, "--check-apply"],
            1,
        ),
    ];
    for (schema, args, want_code) in cases {
        let argv: Vec<&str> = args;
        let out = run_cli(&argv);
        assert_eq!(
            out.code, want_code,
            "{argv:?} exited {} (stderr: {})",
            out.code, out.stderr
        );
        store.assert_valid(schema, &out.json());
    }
}

#[test]
fn size_values_and_order() {
    let out = run_cli(&["--json", "size", "x^2+y^2+z*t+1=0", "3*x^3-2=0"]);
    assert_eq!(out.code, 0);
    let json = out.json();
    let results = json["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["h"], "13");
    assert_eq!(results[1]["h"], "26");
}

#[test]
fn length_values() {
    // L(x^3+y^3+z^3-3) = 8*8*8*3 = 1536, l = log2 ~ 10.585 -> 10.6.
    let out = run_cli(&["--json", "length", "x^3+y^3+z^3=3"]);
    assert_eq!(out.code, 0);
    let json = out.json();
    assert_eq!(json["results"][0]["l_times_10"], 106);
    assert_eq!(json["results"][0]["big_l"], "1536");
    assert_eq!(json["results"][0]["l"], "10.6");
}

#[test]
fn canon_is_a_fixed_point() {
    let inputs = [
        "2*y*z=-2*x^3-2",
        "x^3+y^3+z^3=3",
        "y^3-y=x^4+2*x-2",
        "x^2+y^2+z*t+1=0",
    ];
    for input in inputs {
        let first = run_cli(&["--json", "canon", input]);
        assert_eq!(first.code, 0, "canon {input}: {}", first.stderr);
        let canonical = first.json()["results"][0]["canonical"]
            .as_str()
            .unwrap()
            .to_string();
        let second = run_cli(&["--json", "canon", &canonical]);
        assert_eq!(second.code, 0);
        assert_eq!(
            second.json()["results"][0]["canonical"].as_str().unwrap(),
            canonical,
            "canon not idempotent for {input}"
        );
    }
}

#[test]
fn equiv_exit_codes() {
    // Same class: negate x and swap names.
    let yes = run_cli(&["equiv", "x^3+y*z+1=0", "y^3-x*z-1=0"]);
    assert_eq!(yes.code, 0);
    // Constant term breaks the match.
    let no = run_cli(&["equiv", "x^3+y*z+1=0", "x^3+y*z+2=0"]);
    assert_eq!(no.code, 1);
}

#[test]
fn search_exit_codes() {
    // Solutions found -> 0.
    let hit = run_cli(&["search", "x^3+y^3+z^3=3", "--bound", "4"]);
    assert_eq!(hit.code, 0, "{}", hit.stderr);
    // Complete scan, no solutions -> 1.
    let miss = run_cli(&["--json", "search", "x^2+y^2+1=0", "--bound", "3"]);
    assert_eq!(miss.code, 1);
    let json = miss.json();
    assert_eq!(json["complete"], true);
    assert_eq!(json["solutions"].as_array().unwrap().len(), 0);
    // Budget exhausted before any solution -> 3.
    let cut = run_cli(&[
        "--json", "search", "x^2+y^2+1=0", "--bound", "10", "--budget", "5",
    ]);
    assert_eq!(cut.code, 3);
    let json = cut.json();
    assert_eq!(json["complete"], false);
    assert_eq!(json["stopped"], "budget");
}

#[test]
fn verify_exit_codes() {
    let good = run_cli(&["verify", "x^3+y^3+z^3=3", "1,1,1"]);
    assert_eq!(good.code, 0);
    let bad = run_cli(&["--json", "verify", "x^3+y^3+z^3=3", "1,1,1", "1,1,2"]);
    assert_eq!(bad.code, 1);
    let json = bad.json();
    assert_eq!(json["results"][0]["valid"], true);
    assert_eq!(json["results"][1]["valid"], false);
}

#[test]
fn obstruct_exit_codes() {
    let blocked = run_cli(&["--json", "obstruct", "x^2+y^2=3"]);
    assert_eq!(blocked.code, 0);
    assert_eq!(blocked.json()["obstruction"], 4);
    // (1,1) solves it, so no modulus can rule it out.
    let clear = run_cli(&["--json", "obstruct", "x^2+y^2=2"]);
    assert_eq!(clear.code, 1);
    assert_eq!(clear.json()["obstruction"], Value::Null);
}

#[test]
fn family_rejects_wrong_parametrization() {
    let out = run_cli(&[
        "--json",
        "family",
        "x^3+y^3+z^3=2",
        "--component",
        "1+6*u^3",
        "--component",
        "6*u^2",
        "--component",
        "1-6*u^3",
    ]);
    assert_eq!(out.code, 1);
    assert_eq!(out.json()["valid"], false);
}

#[test]
fn usage_errors_exit_2() {
    // Unknown flag.
    let unknown = run_cli(&["size", "--frobnicate", "x=0"]);
    assert_eq!(unknown.code, 2);
    // Unparseable equation.
    let garbage = run_cli(&["size", "x^^2=0"]);
    assert_eq!(garbage.code, 2);
    // Tuple arity mismatch.
    let arity = run_cli(&["verify", "x^3+y^3+z^3=3", "1,1"]);
    assert_eq!(arity.code, 2);
    // Missing required argument.
    let missing = run_cli(&["canon"]);
    assert_eq!(missing.code, 2);
}

#[test]
fn stdin_dash_reads_equations() {
    let out = run_cli_stdin(
        &["--json", "size", "-"],
        "x^2+y^2+z*t+1=0\n\n3*x^3-2=0\n",
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    let json = out.json();
    let results = json["results"].as_array().unwrap();
    assert_eq!(results.len(), 2, "blank line should be skipped");
    assert_eq!(results[0]["h"], "13");
    assert_eq!(results[1]["h"], "26");
}

#[test]
fn stdin_dash_reads_tuples() {
    let out = run_cli_stdin(
        &["--json", "verify", "x^3+y^3+z^3=3", "-"],
        "1,1,1\n4,4,-5\n",
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.json()["results"].as_array().unwrap().len(), 2);
}

#[test]
fn data_root_from_environment() {
    let out = run_cli_env(
        &["--json", "catalog-verify"],
        &[("DIOPH_DATA_DIR", &data_arg())],
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    let json = out.json();
    assert!(json["checked"].as_u64().unwrap() > 200);
    assert_eq!(json["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn report_smallest_open_two_variable_existence() {
    let out = run_cli(&[
        "--json",
        "catalog-report",
        "--problem",
        "P6",
        "--filter",
        "nvars=2",
        "--data",
        &data_arg(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let json = out.json();
    let reports = json["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["problem"], "P6_existence");
    let records = reports[0]["records"].as_array().unwrap();
    let displays: Vec<&str> = records
        .iter()
        .map(|r| r["display"].as_str().unwrap())
        .collect();
    let expected = [
        "y^3-y=x^4+2*x-2",
        "y^3+x*y=x^4+4",
        "y^3+x*y=x^4+x+2",
        "y^3+y=x^4+x+4",
    ];
    assert_eq!(records.len(), 4, "displays: {displays:?}");
    for want in expected {
        assert!(displays.contains(&want), "missing {want} in {displays:?}");
    }
    for record in records {
        assert_eq!(record["h"], 32);
    }
}

#[test]
fn catalog_diff_identical_inputs_exit_0() {
    let v6 = data_dir().join("versions/v6.jsonl");
    let out = run_cli(&[
        "--json",
        "catalog-diff",
        v6.to_str().unwrap(),
        v6.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let json = out.json();
    assert_eq!(json["added"].as_array().unwrap().len(), 0);
    assert_eq!(json["removed"].as_array().unwrap().len(), 0);
    assert_eq!(json["status_changed"].as_array().unwrap().len(), 0);
}

#[test]
fn threads_flag_is_accepted() {
    let out = run_cli(&["--threads", "1", "--json", "enumerate", "--h-max", "6", "--counts"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    // 2..=6 counts: 1, 1, 4, 6, 11.
    let json = out.json();
    let counts = json["counts"].as_array().unwrap();
    let total: u64 = counts
        .iter()
        .map(|pair| pair[1].as_u64().unwrap())
        .sum();
    assert_eq!(total, 23);
}
