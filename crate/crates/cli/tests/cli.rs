use std::process::Command;

use serde_json::Value;

fn hasse(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hasse")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let (code, stdout, _) = hasse(&full);
    (code, serde_json::from_str(&stdout).expect("stdout is one JSON document"))
}

#[test]
fn poincare_of_quaternion_triple() {
    let (code, out, _) = hasse(&["poincare", "--group", "builtin:quaternion", "--gens", "i,j,-j"]);
    assert_eq!(code, 0);
    assert!(out.contains("p(t) = 1 + 3t + 3t^2 + t^3"), "{out}");
    assert!(out.contains("palindrome: true"));
    assert!(out.contains("[(2,3)]"));
}

#[test]
fn structured_output_echoes_config_and_seed() {
    let (code, v) = structured(&["--seed", "7", "lengths", "--group", "builtin:dihedral:3", "--gens", "r,r*rho"]);
    assert_eq!(code, 0);
    assert_eq!(v["tool"], "hasse");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["config"]["command"]["name"], "lengths");
    let rows = v["report"]["elements"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let top = rows.iter().map(|r| r["length"].as_u64().unwrap()).max().unwrap();
    assert_eq!(top, 3);
}

#[test]
fn frobenius_reports_nakayama_cycles() {
    let (code, v) = structured(&["frobenius", "--group", "builtin:quaternion", "--gens", "i,j,-j"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["frobenius"], true);
    assert_eq!(v["report"]["symmetric"], false);
    assert_eq!(v["report"]["nakayama"]["cycles"], "(j -j)(k -k)");
    assert_eq!(v["report"]["nakayama"]["degree_one_order"], 2);
}

#[test]
fn non_frobenius_is_not_a_check_failure() {
    let (code, v) = structured(&["frobenius", "--group", "builtin:cyclic:5", "--gens", "g,g^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["frobenius"], false);
}

#[test]
fn screen_of_quaternion() {
    let (code, v) = structured(&["screen", "--group", "builtin:quaternion"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["scanned"], 127);
    assert_eq!(v["report"]["candidates"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_d8_accepts_negative_q() {
    let (code, out, _) = hasse(&["verify-d8", "--q", "-1", "--a", "3/2", "--N", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("[FAIL]"));
    let (code, _, _) = hasse(&["verify-d8", "--q", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_d8_rejects_bad_parameters() {
    let (code, _, err) = hasse(&["verify-d8", "--q", "2"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");
    let (code, _, _) = hasse(&["verify-d8", "--q", "x"]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_two() {
    let (code, _, err) = hasse(&["lengths", "--group", "builtin:nope", "--gens", "a"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown builtin"));
    let (code, _, _) = hasse(&["lengths", "--group", "builtin:cyclic:4", "--gens", "zz"]);
    assert_eq!(code, 2);
    let (code, _, _) = hasse(&["lengths", "--group", "builtin:cyclic:4", "--gens", "g^2"]);
    assert_eq!(code, 2, "a non-generating set is an input error");
    let (code, v) = structured(&["group-info", "--group", "/no/such/file.json"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "input_error");
}

#[test]
fn algebra_document_with_bad_grading_exits_one() {
    let dir = std::env::temp_dir().join(format!("hasse-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // g * g^2 lands in degree 0, not 3.
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"group": "builtin:cyclic:3", "generating_set": ["g"],
            "entries": [["g", "g", "2"], ["g", "g^2", "1"]]}"#,
    )
    .unwrap();
    let (code, out, _) = hasse(&["hasse", "--algebra", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("grading: fails"), "{out}");
}

#[test]
fn corpus_passes() {
    let (code, out, _) = hasse(&["corpus"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("all checks passed\n"));
}
