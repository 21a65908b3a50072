//! Subprocess tests of the `algdef` binary: exit codes, JSON shape and the
//! documented example invocations.

use std::process::{Command, Output};

fn algdef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algdef"))
        .args(args)
        .output()
        .expect("failed to launch algdef")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "not valid JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn workspace_file(rel: &str) -> String {
    format!("{}/../../{rel}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn gb_verify_preset_reports_the_tabulated_invariants() {
    let out = algdef(&["gb", "verify", "--preset", "d", "2", "2"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["confluent"], true);
    assert_eq!(report["dim"], 8);
    assert_eq!(report["centre_dim"], 5);
    assert_eq!(report["passed"], true);
    // the discrepancy ledger rides along on every contraction preset
    let notes = report["discrepancy_notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("n-1")));
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("2m-2")));
}

#[test]
fn gb_complete_discovers_the_missing_rule() {
    let out = algdef(&["gb", "complete", "--preset", "d", "3", "2"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["discovered"], true);
    let added: Vec<&str> = report["added_rules"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(added.contains(&"x^5*y"));
}

#[test]
fn excluded_fiber_point_exits_one_with_a_diagnostic() {
    let out = algdef(&["family", "fiber", "--preset", "a2", "--at", "1"]);
    assert_eq!(code(&out), 1);
    let report = json_of(&out);
    assert_eq!(report["passed"], false);
    assert!(report["error"].as_str().unwrap().contains("excluded"));
}

#[test]
fn fiber_of_the_one_parameter_base_family() {
    let out = algdef(&["family", "fiber", "--preset", "dn1", "2", "--at", "1"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["semisimple"], true);
    assert_eq!(report["geometric_type"]["2"], 1);
    assert_eq!(report["geometric_type"]["1"], 2);
}

#[test]
fn reproduce_single_cell_matches_the_expected_row() {
    let out = algdef(&["reproduce", "--type", "d", "--n", "2", "--m", "2"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["unique"], true);
    assert_eq!(report["target"]["2"], 1);
    assert_eq!(report["target"]["1"], 4);
    assert_eq!(report["certificate_matches"], true);
    let stages = report["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 4);
    assert!(stages.iter().all(|s| s["passed"] == true));
}

#[test]
fn reproduce_range_merges_cells_in_order() {
    let out = algdef(&["reproduce", "--range", "2..3"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    let specs: Vec<&str> = report["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["spec"].as_str().unwrap())
        .collect();
    assert_eq!(specs, ["D_{2,2}", "D_{2,3}", "D_{3,2}", "D_{3,3}"]);
}

#[test]
fn reproduce_output_is_byte_identical_across_runs() {
    let first = algdef(&["reproduce", "--type", "d", "--n", "2", "--m", "3"]);
    let second = algdef(&["reproduce", "--type", "d", "--n", "2", "--m", "3"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn obstruct_explicit_and_preset_modes_agree() {
    let preset = json_of(&algdef(&["obstruct", "--type", "d", "--n", "3", "--m", "3"]));
    let explicit = json_of(&algdef(&[
        "obstruct",
        "--dim",
        "14",
        "--centre",
        "8",
        "--nilpotency",
        "9",
    ]));
    assert_eq!(preset["pairs"], explicit["pairs"]);
    assert_eq!(preset["unique"], true);
    assert_eq!(preset["pairs"][0][0], 2);
    assert_eq!(preset["pairs"][0][1], 6);
    assert_eq!(preset["block_bound_two"], true);
}

#[test]
fn dinfty_check_confirms_the_coincidence() {
    let out = algdef(&["dinfty-check", "--n", "2", "--m", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["coincide"], true);
    // below the threshold the claim is not even entertained
    let bad = algdef(&["dinfty-check", "--n", "2", "--m", "3"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn malformed_files_exit_two_with_a_located_message() {
    let dir = std::env::temp_dir().join("algdef-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "generators: x, y\nbogus: 3\nrelation: x\n").unwrap();
    let out = algdef(&["gb", "verify", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("line 2"), "no position in: {msg}");

    let missing = algdef(&["gb", "verify", "--file", "/nonexistent.txt"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn annotated_example_files_round_trip() {
    let out = algdef(&["gb", "complete", "--file", &workspace_file("presentations/d22.txt")]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["dim"], 8);
    assert!(report["added_rules"]
        .as_array()
        .unwrap()
        .iter()
        .any(|v| v == "x^3*y"));

    let fam = algdef(&[
        "family",
        "verify",
        "--file",
        &workspace_file("presentations/a2_family.txt"),
    ]);
    assert_eq!(code(&fam), 0);
    let report = json_of(&fam);
    assert_eq!(report["rank"], 6);
    assert_eq!(report["associative_identity"], true);

    let ind = algdef(&[
        "family",
        "fiber",
        "--file",
        &workspace_file("presentations/induction_2_2.txt"),
        "--at",
        "2",
    ]);
    assert_eq!(code(&ind), 0);
    assert_eq!(json_of(&ind)["dim"], 8);
}

#[test]
fn hochschild_preset_reports_consistency() {
    let out = algdef(&["algebra", "hochschild", "--preset", "a2"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["dims"][0], report["centre_dim"]);
    assert_eq!(report["hh0_matches_centre"], true);
    // kmax > 3 without a budget is an input error, not a crash
    let guarded = algdef(&["algebra", "hochschild", "--preset", "a2", "--kmax", "4"]);
    assert_eq!(code(&guarded), 2);
}

#[test]
fn certify_builds_a_verified_chain() {
    let out = algdef(&["family", "certify", "--type", "d", "--n", "2", "--m", "inf"]);
    assert_eq!(code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["matches_expected_target"], true);
    assert_eq!(report["certificate"]["target"]["2"], 1);
    assert_eq!(report["certificate"]["target"]["1"], 5);
}

#[test]
fn timing_is_opt_in() {
    let plain = json_of(&algdef(&["dinfty-check", "--n", "2", "--m", "4"]));
    assert!(plain.get("timing_ms").is_none());
    let timed = json_of(&algdef(&["--timing", "dinfty-check", "--n", "2", "--m", "4"]));
    assert!(timed.get("timing_ms").is_some());
}
