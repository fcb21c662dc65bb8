mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::corpus_path;

fn ciforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ciforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn corpus(name: &str) -> String {
    corpus_path(name).to_string_lossy().into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn decide_twisted_cubic_is_not_ci() {
    let out = ciforge(&["decide", &corpus("twisted_cubic"), "--point", "1,1,1,1"]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["outcome"], "non_ci");
    assert_eq!(
        doc["witness"],
        "-T1^2 + T0*T2 + T1*T2 - T2^2 - T0*T3 + T1*T3"
    );
    assert_eq!(
        doc["point"],
        serde_json::json!(["1/1", "1/1", "1/1", "1/1"])
    );
}

#[test]
fn decide_lqr_is_ci_with_two_generators() {
    let out = ciforge(&["decide", &corpus("lqr"), "--point", "1,1,1,1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["outcome"], "ci");
    assert_eq!(doc["final_generators"].as_array().unwrap().len(), 2);
    assert_eq!(doc["trace"], serde_json::json!([[1, 2], [1, 1]]));
}

#[test]
fn point_off_the_variety_is_a_precondition_failure() {
    let out = ciforge(&["decide", &corpus("twisted_cubic"), "--point", "1,1,0,0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("point not on variety"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn singular_point_is_a_precondition_failure() {
    let out = ciforge(&["decide", &corpus("nodal_cubic")]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not smooth"));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    assert_eq!(code(&ciforge(&[])), 1);
    assert_eq!(code(&ciforge(&["frobnicate"])), 1);
    assert_eq!(code(&ciforge(&["decide", "/nonexistent.ideal"])), 1);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "field: q\nvars: T0 T1\ngens:\nT0 +\n").unwrap();
    let out = ciforge(&["dim", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
}

#[test]
fn field_override_reduces_mod_p() {
    let out = ciforge(&["decide", &corpus("lqr"), "--field", "fp:7919"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["field"], "fp 7919");
    assert_eq!(doc["point"], serde_json::json!(["1", "1", "1", "1"]));
}

fn decide_to(name: &str, cert: &Path) -> i32 {
    code(&ciforge(&[
        "decide",
        &corpus(name),
        "--out",
        cert.to_str().unwrap(),
    ]))
}

#[test]
fn verify_round_trip_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "twisted_cubic",
        "lqr",
        "padded_subspace",
        "twisted_cubic_fp",
        "quadric_surface",
    ] {
        let a = dir.path().join(format!("{name}.a.json"));
        let b = dir.path().join(format!("{name}.b.json"));
        let first = decide_to(name, &a);
        assert!(first == 0 || first == 3);
        assert_eq!(decide_to(name, &b), first);
        assert_eq!(
            std::fs::read(&a).unwrap(),
            std::fs::read(&b).unwrap(),
            "{name}"
        );
        let out = ciforge(&["verify", &corpus(name), "--cert", a.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{name}: {}", stderr(&out));
        assert_eq!(stdout(&out), "verified\n");
    }
}

#[test]
fn verify_rejects_tampering_and_foreign_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    assert_eq!(decide_to("lqr", &cert), 0);
    let text = std::fs::read_to_string(&cert).unwrap();

    let tampered = dir.path().join("t.json");
    std::fs::write(&tampered, text.replace("-T1*T2 + T0*T3", "-T1*T3 + T0*T3")).unwrap();
    let out = ciforge(&[
        "verify",
        &corpus("lqr"),
        "--cert",
        tampered.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);

    let out = ciforge(&[
        "verify",
        &corpus("twisted_cubic"),
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("hash mismatch"));

    let garbage = dir.path().join("g.json");
    std::fs::write(&garbage, "{\"format_version\": 1}").unwrap();
    let out = ciforge(&[
        "verify",
        &corpus("lqr"),
        "--cert",
        garbage.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn decide_with_out_prints_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let out = ciforge(&[
        "decide",
        &corpus("twisted_cubic"),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);
    let s = stdout(&out);
    assert!(s.starts_with("not a complete intersection\n"), "{s}");
    assert!(s.contains("codimension: 2"));
    assert!(cert.exists());
}

#[test]
fn groebner_and_dim() {
    let out = ciforge(&["groebner", &corpus("twisted_cubic")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "T2^2 - T1*T3\nT1*T2 - T0*T3\nT1^2 - T0*T2\n");
    let out = ciforge(&["dim", &corpus("rational_normal_quartic")]);
    assert_eq!(stdout(&out), "dimension: 1\ncodimension: 3\n");
}

#[test]
fn member_and_trivial() {
    let cubic = corpus("twisted_cubic");
    let out = ciforge(&["member", &cubic, "--poly", "T0*T2 - T1^2 + T1*T3 - T2^2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "member\ncofactors:\n  1\n  1\n  0\n");
    assert_eq!(code(&ciforge(&["member", &cubic, "--poly", "T0^2"])), 3);

    let lqr = corpus("lqr");
    let out = ciforge(&["trivial", &lqr, "--poly", "T0^2 - T0*T1 + T0*T3 - T1*T2"]);
    assert_eq!(code(&out), 3, "{}", stdout(&out));
    let out = ciforge(&["trivial", &lqr, "--poly", "T0^2 - T0*T1"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(code(&ciforge(&["trivial", &lqr, "--poly", "T0^2"])), 2);
}

#[test]
fn check_iv_exit_codes() {
    let cubic = corpus("twisted_cubic");
    let witness = "T0*T2 - T1^2 + T1*T3 - T2^2 - T0*T3 + T1*T2";
    assert_eq!(code(&ciforge(&["check-iv", &cubic, "--poly", witness])), 3);
    assert_eq!(
        code(&ciforge(&["check-iv", &cubic, "--poly", "T0*T2 - T1^2"])),
        0
    );

    let lqr = corpus("lqr");
    let q_plus = "T0*T3 - T1*T2 + T1*T0 - T1^2";
    assert_eq!(
        code(&ciforge(&[
            "check-iv", &lqr, "--poly", q_plus, "--family", "T0 - T1"
        ])),
        0
    );
    // trivially contained singular member: containment holds but nothing is refuted
    assert_eq!(
        code(&ciforge(&[
            "check-iv",
            &lqr,
            "--poly",
            "T0^2 - 2*T0*T1 + T1^2"
        ])),
        0
    );
    assert_eq!(
        code(&ciforge(&[
            "check-iv",
            &lqr,
            "--poly",
            "T0*T3 - T1*T2",
            "--family",
            "T0*T1 - T1^2"
        ])),
        2
    );
}

#[test]
fn timeout_exits_one() {
    let out = Command::new(env!("CARGO_BIN_EXE_ciforge"))
        .args(["decide", &corpus("rational_normal_quartic")])
        .env("CIFORGE_TIMEOUT_SECS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("timed out"));
}
