use std::io::Write;
use std::process::{Command, Output};

fn ringoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringoid")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn jans_on_a2cat_passes_with_four_roundtrips() {
    let o = ringoid(&["jans", "catalog:a2cat", "--p", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let rt = v["findings"].as_array().unwrap().iter().filter(|f| f["statement_id"].as_str().unwrap().starts_with("jans.roundtrip[")).count();
    assert_eq!(rt, 4);
    assert!(v["findings"].as_array().unwrap().iter().all(|f| f["verdict"] == "pass"));
}

#[test]
fn gabriel_on_dual_finds_two_topologies() {
    let o = ringoid(&["gabriel", "catalog:dual", "--p", "2", "--enumerate", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["output"]["topologies"], 2);
    assert_eq!(v["output"]["torsion_fingerprints"], 2);
}

#[test]
fn broken_category_exits_65_with_the_triple() {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    write!(
        f,
        r#"{{"p":2,"objects":["o"],"hom":{{"o|o":2}},"id":{{"o":[1,0]}},"comp":{{"o|o|o":[[[1,0],[0,1]],[[1,1],[1,1]]]}}}}"#
    )
    .unwrap();
    let o = ringoid(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 65);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("associativity fails on objects (0,0,0,0)"), "{out}");
}

#[test]
fn unreadable_and_malformed_files_exit_65() {
    assert_eq!(code(&ringoid(&["validate", "/definitely/not/here.json"])), 65);
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    write!(f, "{{\"p\": 4}}").unwrap();
    assert_eq!(code(&ringoid(&["validate", f.path().to_str().unwrap()])), 65);
}

#[test]
fn bad_flags_exit_64() {
    assert_eq!(code(&ringoid(&["frobnicate", "catalog:pt"])), 64);
    assert_eq!(code(&ringoid(&["jans", "catalog:pt", "--dim", "many"])), 64);
    assert_eq!(code(&ringoid(&["jans", "catalog:nosuch"])), 64);
    assert_eq!(code(&ringoid(&["jans", "catalog:pt(3)", "--p", "2"])), 64);
    assert_eq!(code(&ringoid(&["recollement", "catalog:a2cat", "--ideal", "1|2|1"])), 64);
}

#[test]
fn refusal_exits_2_and_names_the_knob() {
    let o = Command::new(env!("CARGO_BIN_EXE_ringoid"))
        .args(["center", "catalog:mat2", "--idempotents"])
        .env("RINGOID_CAP_VECTORS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stdout).contains("RINGOID_CAP_VECTORS"));
}

#[test]
fn census_json_is_byte_identical_across_runs() {
    let a = ringoid(&["census", "catalog:a2cat", "--json"]);
    let b = ringoid(&["census", "catalog:a2cat", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["output"]["ideals"], 5);
    assert_eq!(v["output"]["idempotent_ideals"], 4);
    assert_eq!(v["output"]["split"], 2);
    for f in v["findings"].as_array().unwrap() {
        assert!(!f["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn complete_emits_a_loadable_category() {
    let o = ringoid(&["complete", "catalog:a2cat", "--bound", "2"]);
    assert_eq!(code(&o), 0);
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(&o.stdout).unwrap();
    let v = ringoid(&["validate", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["findings"][0]["witness"]["objects"], 7);
}

#[test]
fn quiver_files_load() {
    let mut f = tempfile::Builder::new().suffix(".quiver").tempfile().unwrap();
    write!(f, "vertices 1 2; arrow a: 1 -> 2; field 2; maxlen 2;").unwrap();
    let o = ringoid(&["ideals", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["findings"][0]["witness"]["ideals"], 5);
}

#[test]
fn recollement_by_generator() {
    let o = ringoid(&["recollement", "catalog:a2cat", "--ideal", "2|2|1", "--bound", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["findings"].as_array().unwrap().len(), 1);
    assert_eq!(v["findings"][0]["witness"]["corner_objects"], 1);
}
