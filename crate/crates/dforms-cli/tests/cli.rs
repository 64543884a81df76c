//! Golden tests pinning the canonical JSON output and the exit codes of
//! every subcommand.

use std::process::{Command, Output};

fn dforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dforms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_line(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim()
        .to_string()
}

fn stderr_line(out: &Output) -> String {
    String::from_utf8(out.stderr.clone())
        .unwrap()
        .trim()
        .to_string()
}

#[test]
fn check_betti_infeasible_example() {
    let out = dforms(&["check-betti", r#"{"n":4,"d":3,"row":[14,29,22,6,0]}"#]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout_line(&out),
        r#"{"feasible":false,"m":[1,3,4,6,0],"schema":"dforms/1","violation":"m4=6 > bound(m3,2)=5"}"#
    );
}

#[test]
fn check_betti_feasible_with_witness() {
    let out = dforms(&["check-betti", r#"{"n":2,"d":2,"row":[3,2,0]}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"feasible":true,"m":[1,2,0],"roundtrip":"ok","schema":"dforms/1","witness":{"basis":"x1","gens":[[[1,2]],[[1,1],[2,1]],[[2,2]]],"schema":"dforms/1","vars":2}}"#
    );
}

#[test]
fn witness_from_m_sequence() {
    let out = dforms(&["witness", r#"{"d":2,"m":[1,2]}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(v["feasible"], serde_json::json!(true));
    assert_eq!(v["witness"]["gens"].as_array().unwrap().len(), 3);
}

#[test]
fn classify_remark_space() {
    let space = r#"{"d":3,"members":[[[0,3]],[[0,2],[1,1]],[[0,1],[1,2]],[[0,1],[1,1],[2,1]],[[0,1],[1,1],[3,1]]]}"#;
    let out = dforms(&["classify", space]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"block_stable":false,"schema":"dforms/1","stable":true,"strongly_stable":false}"#
    );
}

#[test]
fn classify_p_borel_flag() {
    let space = r#"{"d":2,"members":[[[0,2]],[[1,2]]]}"#;
    let out = dforms(&["classify", space, "--p", "2"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"block_stable":true,"p":2,"p_borel":true,"schema":"dforms/1","stable":false,"strongly_stable":false}"#
    );
    let out = dforms(&["classify", space, "--p", "3"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"block_stable":true,"p":3,"p_borel":false,"schema":"dforms/1","stable":false,"strongly_stable":false}"#
    );
}

#[test]
fn star_identity_example() {
    let out = dforms(&["star", "x0^3", "x0x1x2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"pairs":[[0,1],[1,1],[2,1]],"result":"x0 x1 x2","schema":"dforms/1"}"#
    );
}

#[test]
fn phi_and_psi() {
    let out = dforms(&["phi", "y2", "--d", "3"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"pairs":[[0,1],[1,2]],"result":"x0 x1^2","schema":"dforms/1"}"#
    );
    let out = dforms(&["phi", "[0,1,0]", "--d", "3"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"pairs":[[0,1],[1,2]],"result":"x0 x1^2","schema":"dforms/1"}"#
    );
    let out = dforms(&["psi", "x1^2 x2"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"exponents":[1,0,1],"result":"y1 y3","schema":"dforms/1"}"#
    );
}

#[test]
fn dual_both_sides_agree_on_the_worked_case() {
    let dir = std::env::temp_dir();
    let psi_path = dir.join("dforms_psi_in.json");
    let murai_path = dir.join("dforms_murai_in.json");
    std::fs::write(
        &psi_path,
        r#"{"vars":2,"basis":"x0","gens":[[[0,2]],[[0,1],[1,1]]]}"#,
    )
    .unwrap();
    std::fs::write(
        &murai_path,
        r#"{"vars":2,"basis":"x1","gens":[[[1,2]],[[1,1],[2,1]]]}"#,
    )
    .unwrap();
    let expected = r#"{"basis":"y","gens":[[[1,1]],[[2,2]]],"schema":"dforms/1","vars":2}"#;
    let out = dforms(&["dual", "--side", "psi", "--in", psi_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_line(&out), expected);
    let out = dforms(&[
        "dual",
        "--side",
        "murai",
        "--in",
        murai_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_line(&out), expected);
}

#[test]
fn ek_betti_table() {
    let out = dforms(&[
        "ek-betti",
        r#"{"vars":2,"basis":"x1","gens":[[[1,2]],[[1,1],[2,1]],[[2,2]]]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"n":2,"schema":"dforms/1","table":[[0,2,3],[1,3,2]]}"#
    );
}

#[test]
fn macaulay_rep_and_bound() {
    let out = dforms(&["macaulay", "rep", "4", "2"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"a":4,"d":2,"ks":[3,1],"schema":"dforms/1"}"#
    );
    let out = dforms(&["macaulay", "bound", "4", "2"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"a":4,"bound":5,"d":2,"schema":"dforms/1"}"#
    );
    // arbitrary precision survives the JSON layer
    let out = dforms(&["macaulay", "bound", "123456789123456789123456789", "5"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"a":123456789123456789123456789,"bound":8861466713095797537693031053309,"d":5,"schema":"dforms/1"}"#
    );
}

#[test]
fn osequence_verdicts() {
    let out = dforms(&["osequence", "1", "3", "4", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout_line(&out),
        r#"{"entries":[1,3,4,6],"osequence":false,"schema":"dforms/1","violated_index":3}"#
    );
    let out = dforms(&["osequence", "1", "3", "4", "5", "--cap", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"cap":3,"cap_ok":true,"entries":[1,3,4,5],"osequence":true,"schema":"dforms/1"}"#
    );
    // cap failure flips the verdict even though the growth holds
    let out = dforms(&["osequence", "1", "4", "--cap", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout_line(&out),
        r#"{"cap":3,"cap_ok":false,"entries":[1,4],"osequence":true,"schema":"dforms/1"}"#
    );
}

#[test]
fn census_report() {
    let out = dforms(&["census", "--d", "2", "--max-index", "2", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"counts":{"block_stable_profiles":7,"block_stable_spaces":13,"osequences":7,"strongly_stable_profiles":7,"strongly_stable_spaces":7,"subsets":64},"d":2,"max_index":2,"schema":"dforms/1","sets_equal":true}"#
    );
}

#[test]
fn input_errors_exit_2_and_name_the_field() {
    let out = dforms(&["check-betti", r#"{"n":4,"row":[1]}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).contains("missing field 'd'"));
    assert!(stdout_line(&out).is_empty());

    let out = dforms(&["check-betti", r#"{"n":2,"d":2,"row":[1,0]}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).contains("n+1"));

    let out = dforms(&["check-betti", "not json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).contains("malformed JSON"));

    let out = dforms(&[
        "ek-betti",
        r#"{"vars":2,"basis":"x1","gens":[[[1,1],[2,1]]]}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).contains("stable ideal"));

    let out = dforms(&["star", "x0", "x0x1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dforms(&["osequence", "1", "-3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dforms(&["classify", r#"{"d":2,"members":[[[0,3]]]}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).contains("degree"));
}

#[test]
fn one_based_convention_flag() {
    let out = dforms(&["star", "x1^3", "x1x2x3", "--d", "3", "--one-based"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"pairs":[[1,1],[2,1],[3,1]],"result":"x1 x2 x3","schema":"dforms/1"}"#
    );
    // the same space reads as stable under the shifted convention
    let space = r#"{"d":2,"members":[[[1,2]],[[1,1],[2,1]]]}"#;
    let out = dforms(&["classify", space, "--one-based"]);
    assert_eq!(
        stdout_line(&out),
        r#"{"block_stable":true,"schema":"dforms/1","stable":true,"strongly_stable":true}"#
    );
}

#[test]
fn pretty_renders_multiline() {
    let out = dforms(&["--pretty", "macaulay", "rep", "4", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() > 1);
    assert!(text.contains("\"schema\": \"dforms/1\""));
}
