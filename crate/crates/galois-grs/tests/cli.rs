//! End-to-end checks of the ggrs binary: exit codes, file artifacts, and
//! the documented output shapes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ggrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ggrs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("ggrs-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn field_command() {
    let out = ggrs(&["field", "--p", "3", "--h", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"p\": 3"));
    assert!(text.contains("\"modulus\""));

    // unknown field without a modulus is a usage error (exit 2)
    let out = ggrs(&["field", "--p", "17", "--h", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_verify_derive_quantum_pipeline() {
    let grs_path = tmpfile("c.grs.json");
    let code_path = tmpfile("c.code.json");
    let out = ggrs(&[
        "construct",
        "--family",
        "C",
        "--p",
        "3",
        "--h",
        "4",
        "--e",
        "1",
        "--x1",
        "720",
        "--x2",
        "780",
        "--r1",
        "1",
        "--extended",
        "--out",
        grs_path.to_str().unwrap(),
        "--out-code",
        code_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[6,2,5]_{3^4}"), "{text}");
    assert!(text.contains("Certified"));

    // verify the GRS artifact: so + hull + mds + dual all pass
    let out = ggrs(&[
        "verify",
        grs_path.to_str().unwrap(),
        "--e",
        "1",
        "--checks",
        "so,hull,mds,dual",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // derive: shorten by 3 -> [19,3], still self-orthogonal
    let derived_path = tmpfile("c.short.json");
    let out = ggrs(&[
        "derive",
        code_path.to_str().unwrap(),
        "--op",
        "shorten",
        "--e",
        "1",
        "--s",
        "1",
        "--out",
        derived_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[5,1]"), "{text}");

    // quantum from explicit parameters
    let out = ggrs(&[
        "quantum", "--params", "340,14,0", "--base", "25",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"quantum_mds\":true") || text.contains("\"quantum_mds\": true"));

    for p in [grs_path, code_path, derived_path] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn construct_rejects_bad_dimension() {
    // k above the family's dimension bound is a usage error naming it
    let out = ggrs(&[
        "construct", "--family", "A", "--p", "3", "--h", "4", "--e", "1", "--t", "1", "--k", "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bound 7"), "{err}");
}

#[test]
fn verify_detects_tampering() {
    let grs_path = tmpfile("tamper.grs.json");
    let out = ggrs(&[
        "construct",
        "--family",
        "B",
        "--p",
        "3",
        "--h",
        "4",
        "--e",
        "1",
        "--t",
        "2",
        "--k",
        "10",
        "--out",
        grs_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[80,10,71]_{3^4}"), "{text}");

    // hand-edit one multiplier and re-verify: exit code 1 with a witness
    let json = std::fs::read_to_string(&grs_path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let mults = v["multipliers"].as_array_mut().unwrap();
    let first = mults[0].as_i64().unwrap();
    mults[0] = serde_json::json!((first + 1) % 80);
    std::fs::write(&grs_path, serde_json::to_string(&v).unwrap()).unwrap();

    let out = ggrs(&[
        "verify",
        grs_path.to_str().unwrap(),
        "--e",
        "1",
        "--checks",
        "so,hull",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("witness") || text.contains("fail") || text.contains("inconclusive"));

    let _ = std::fs::remove_file(grs_path);
}

#[test]
fn reproduce_and_export_tables() {
    let out = ggrs(&["reproduce", "--table", "7", "--depth", "full"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("9/9 rows pass"), "{text}");

    let out = ggrs(&["reproduce", "--table", "Q1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("14/14 rows pass"));

    let out = ggrs(&["--format", "tsv", "export", "--table", "Q2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("params\ts\tN\tK\tD\tbase"));
    assert!(text.contains("1252\t1200\t27\t49"));

    let out = ggrs(&["reproduce", "--table", "9"]);
    assert_eq!(out.status.code(), Some(2), "table 9 does not exist");
}
