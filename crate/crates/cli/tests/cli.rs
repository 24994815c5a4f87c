use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn z2z4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2z4"))
        .args(args)
        .env_remove("Z2Z4_LIMIT")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = z2z4(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out) = run(&full);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn classify_dual_example() {
    let v = json(&["classify", &path("dual_example.z2z4")]);
    assert_eq!(v["size"], 8);
    assert_eq!(v["relative"]["m1"], 4);
    assert_eq!(v["relative"]["m"], 3);
    let (code, text) = run(&["classify", &path("dual_example.z2z4")]);
    assert_eq!(code, 0);
    assert!(text.contains("relative two-weight: C(4, 3)"));
}

#[test]
fn dual_contains_listed_generators() {
    let v = json(&["dual", &path("dual_example.z2z4")]);
    assert_eq!(v["dual_size"], 8);
    let gens: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap())
        .collect();
    assert!(gens.contains(&"00|22"));
    assert!(gens.contains(&"10|02"));
}

#[test]
fn enumerate_output_is_a_code_file() {
    let (code, text) = run(&["enumerate", &path("dual_example.z2z4")]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().count(), 2 + 8);
    let f = temp_file(&text);
    let (code, again) = run(&["enumerate", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(again, text);
}

#[test]
fn json_and_text_agree() {
    let v = json(&["gray", &path("dual_example.z2z4")]);
    let (_, text) = run(&["gray", &path("dual_example.z2z4")]);
    for w in v["codewords"].as_array().unwrap() {
        assert!(text.lines().any(|l| l == w.as_str().unwrap()));
    }
    assert!(text.contains(&format!("linear: {}", v["linear"])));
}

#[test]
fn replicate_scales_structure() {
    let v = json(&["replicate", &path("dual_example.z2z4"), "--t", "3"]);
    assert_eq!(v["relative"], serde_json::json!([12, 9]));
    assert_eq!(v["alpha"], 6);
}

#[test]
fn paut_with_and_without_formula() {
    let v = json(&["paut", &path("paut12.z2z4"), "--formula"]);
    assert_eq!(v["order"], 12);
    assert_eq!(v["formula_order"], 12);
    assert_eq!(v["formula_matches"], true);
    let v = json(&["paut", &path("paut_discrepancy.z2z4")]);
    assert_eq!(v["order"], 8);
    assert!(v["formula_order"].is_null());
    let v = json(&["paut", &path("full_paut.z2z4")]);
    assert_eq!(v["order"], 576);
}

#[test]
fn equiv_found_and_not_found() {
    let v = json(&["equiv", &path("equiv_a1.z2z4"), &path("equiv_a2.z2z4")]);
    assert_eq!(v["equivalent"], true);
    let (code, text) = run(&["equiv", &path("equiv_b1.z2z4"), &path("equiv_b2.z2z4")]);
    assert_eq!(code, 0);
    assert!(text.starts_with("equivalent: yes"));

    let f = temp_file("alpha=2\nbeta=2\n10|11\n");
    let (code, text) = run(&["equiv", &path("equiv_a1.z2z4"), f.path().to_str().unwrap()]);
    assert_eq!(code, 4);
    assert_eq!(text, "equivalent: no\n");
}

#[test]
fn check_theorems_reports() {
    let v = json(&["check-theorems", &path("single_generator.z2z4")]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 14);
    let single = entries
        .iter()
        .find(|e| e["id"] == "thm-single-gen-weights")
        .unwrap();
    assert_eq!(single["status"], "holds");

    let v = json(&["check-theorems", &path("zero.z2z4")]);
    assert!(v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["status"] == "not-applicable"));

    let v = json(&["check-theorems", &path("paut_discrepancy.z2z4"), "--t", "3"]);
    let order = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["id"] == "prop-paut-order")
        .unwrap();
    assert_eq!(order["status"], "fails");
    assert_eq!(order["details"], "formula 6, exhaustive 8");
}

#[test]
fn exit_codes() {
    let bad = temp_file("alpha=2\nbeta=2\n10|14\n");
    let out = z2z4(&["classify", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 5"));

    let zero_shape = temp_file("alpha=0\nbeta=0\n");
    assert_eq!(
        z2z4(&["classify", zero_shape.path().to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    assert_eq!(z2z4(&["classify", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(
        z2z4(&["--limit", "10", "paut", &path("full_paut.z2z4")])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        z2z4(&["enumerate", &path("full_paut.z2z4"), "--limit", "2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_z2z4"))
        .args(["paut", &path("full_paut.z2z4")])
        .env("Z2Z4_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_z2z4"))
        .args(["--limit", "1000", "paut", &path("full_paut.z2z4")])
        .env("Z2Z4_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--json", "paut", &path("paut12.z2z4")]);
    let b = run(&["--json", "paut", &path("paut12.z2z4")]);
    assert_eq!(a, b);
}
