use std::path::{Path, PathBuf};
use std::process::Command;

use hopfforge::catalog::catalog_ids;
use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
    stdout: String,
    stderr: String,
}

fn hopfforge(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfforge")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        report: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_projector(dir: &Path, dim: usize, keep: usize) -> PathBuf {
    let entries: Vec<Value> = (1..=keep).map(|i| serde_json::json!([i, i, "1"])).collect();
    let p = path(dir, &format!("phi_{dim}_{keep}.json"));
    std::fs::write(&p, serde_json::json!({ "dim": dim, "conductor": 1, "entries": entries }).to_string()).unwrap();
    p
}

#[test]
fn every_catalog_entry_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for id in catalog_ids() {
        let f = path(dir.path(), &format!("{id}.json"));
        assert_eq!(hopfforge(&["catalog", "get", id, "-o", s(&f)]).code, 0, "{id}");
        let v = hopfforge(&["verify", s(&f)]);
        assert_eq!(v.code, 0, "{id}: {}", v.stdout);
        assert_eq!(v.report["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn corrupted_structure_is_a_negative_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "kz2.json");
    hopfforge(&["catalog", "get", "KZ_2", "-o", s(&f)]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["mul"][3][3] = Value::from("2");
    std::fs::write(&f, v.to_string()).unwrap();
    let r = hopfforge(&["--summary", "verify", s(&f)]);
    assert_eq!(r.code, 1);
    assert!(!r.report["result"]["failures"][0]["indices"].as_array().unwrap().is_empty());
    assert!(r.stderr.contains("failing"));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "bad.json");
    std::fs::write(&f, r#"{"dim": 2, "conductor": 1, "mul": [[1,1,1,"1/"]], "comul": [], "counit": ["1","0"]}"#).unwrap();
    assert_eq!(hopfforge(&["verify", s(&f)]).code, 2);
    assert_eq!(hopfforge(&["degenerate", s(&f)]).code, 2);
    assert_eq!(hopfforge(&["catalog", "get", "no-such-entry"]).code, 2);
}

#[test]
fn degenerations_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let h = path(dir.path(), "h8.json");
    hopfforge(&["catalog", "get", "Adprime_C4", "-o", s(&h)]);
    let phi = write_projector(dir.path(), 8, 4);
    let out = path(dir.path(), "limit.json");
    let r = hopfforge(&["degenerate", s(&h), "--phi", s(&phi), "--mode", "both", "-o", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.report["result"]["oracle_agreement"], Value::Bool(true));
    let expected = path(dir.path(), "h0.json");
    hopfforge(&["catalog", "get", "Aprime_C4", "-o", s(&expected)]);
    let id = path(dir.path(), "id.json");
    std::fs::write(&id, serde_json::json!({"dim": 8, "conductor": 1, "entries": (1..=8).map(|i| serde_json::json!([i, i, "1"])).collect::<Vec<_>>()}).to_string()).unwrap();
    assert_eq!(hopfforge(&["isocheck", s(&id), s(&out), s(&expected)]).code, 0);

    let t = path(dir.path(), "t4.json");
    hopfforge(&["catalog", "get", "T_4", "-o", s(&t)]);
    let zero = write_projector(dir.path(), 4, 0);
    let r = hopfforge(&["degenerate", s(&t), "--phi", s(&zero)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["result"]["comul_condition"]["violation"]["identity"], 3);

    let r = hopfforge(&["graded", s(&h), "--degrees", "0,0,0,0,1,1,1,1", "--mode", "both"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = hopfforge(&["graded", s(&h), "--degrees", "0,1,1,1,0,1,1,1"]);
    assert_eq!(r.code, 1);
}

#[test]
fn family_limit_and_other_commands() {
    let dir = tempfile::tempdir().unwrap();
    let fam = path(dir.path(), "at.json");
    assert_eq!(hopfforge(&["catalog", "family", "A_t", "-o", s(&fam)]).code, 0);
    let r = hopfforge(&["family-limit", s(&fam)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.report["result"]["limit"]["dim"], 12);

    let t = path(dir.path(), "t4.json");
    hopfforge(&["catalog", "get", "taft_2", "-o", s(&t)]);
    let r = hopfforge(&["orbit-dim", s(&t)]);
    assert_eq!(r.report["result"]["orbit_dimension"], 15);
    let r = hopfforge(&["fingerprint", s(&t), "--random-basis", "5", "--seed", "9"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["fingerprint"]["grouplike_count"], 2);
    assert!(r.report["result"]["note"].as_str().unwrap().contains("prove nothing"));

    let ks3 = path(dir.path(), "ks3.json");
    hopfforge(&["catalog", "get", "KS_3", "-o", s(&ks3)]);
    let d = path(dir.path(), "ks3_dual.json");
    assert_eq!(hopfforge(&["dual", s(&ks3), "-o", s(&d)]).code, 0);
    assert_eq!(hopfforge(&["verify", s(&d)]).code, 0);
}

#[test]
fn reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "t9.json");
    hopfforge(&["catalog", "get", "T_9", "-o", s(&f)]);
    let a = hopfforge(&["fingerprint", s(&f), "--random-basis", "3"]);
    let b = hopfforge(&["fingerprint", s(&f), "--random-basis", "3"]);
    assert_eq!(a.stdout, b.stdout);
}
