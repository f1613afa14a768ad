use std::path::PathBuf;
use std::process::{Command, Output};

fn kzero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kzero")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn bundled() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/newform_276.json").display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kzero-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_is_deterministic() {
    let a = kzero(&["verify", &bundled()]);
    let b = kzero(&["verify", &bundled()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn json_report_matches_text_and_differs_only_in_time() {
    let (r1, r2) = (scratch("r1.json"), scratch("r2.json"));
    for r in [&r1, &r2] {
        assert!(kzero(&["verify", &bundled(), "--report", r.to_str().unwrap()]).status.success());
    }
    let mut v1: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&r1).unwrap()).unwrap();
    let mut v2: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&r2).unwrap()).unwrap();
    assert!(v1["generated_at_unix"].is_u64());
    v1.as_object_mut().unwrap().remove("generated_at_unix");
    v2.as_object_mut().unwrap().remove("generated_at_unix");
    assert_eq!(v1, v2);
    assert_eq!(v1["verdict"], "pass");
    let checks = v1["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 10);
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        [
            "class_group",
            "nonprincipal_ideal",
            "frobenius_charpoly",
            "weil_shape_ordinary",
            "endomorphism_stability",
            "distinct_fields",
            "deduce_endomorphism_ring",
            "steinitz",
            "dimension",
            "zero_divisor"
        ]
    );
    assert!(checks.iter().all(|c| c["provenance"] == "computed" && c["verdict"] == "pass"));
    assert_eq!(checks[0]["outputs"]["structure"], "Z/2");
    assert_eq!(checks[5]["outputs"]["ratio"], "81209/332481");
    assert!(v1["assumed_by_citation"].as_array().unwrap().len() >= 5);
}

#[test]
fn input_errors_exit_2_with_location() {
    let bad = scratch("bad.json");
    let text = std::fs::read_to_string(bundled()).unwrap().replace("\"p\": 19", "\"p\": 23");
    std::fs::write(&bad, text).unwrap();
    let o = kzero(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("eigenvalues[1]"), "{err}");

    std::fs::write(&bad, "{ \"level\": 276, ").unwrap();
    let o = kzero(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    assert_eq!(kzero(&["verify", "/nonexistent/input.json"]).status.code(), Some(2));
}

#[test]
fn a_tiny_bound_still_passes_and_is_reported() {
    let o = kzero(&["verify", &bundled(), "--bound", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("in   bound = 1"));
}

#[test]
fn unstable_reduction_fails_at_stability() {
    let bad = scratch("unstable.json");
    let text = std::fs::read_to_string(bundled()).unwrap().replace("\"a\": [2, 1, 1, 1]", "\"a\": [0, 1, 1, 1]");
    std::fs::write(&bad, text).unwrap();
    let o = kzero(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first failure: check 5 endomorphism_stability"));
}

#[test]
fn classgroup_subcommand() {
    let o = kzero(&["classgroup", "--d", "10"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("class number: 2") && s.contains("structure: Z/2"), "{s}");
    let s = stdout(&kzero(&["classgroup", "--d", "-5"]));
    assert!(s.contains("discriminant: -20") && s.contains("class number: 2"), "{s}");
    assert!(stdout(&kzero(&["classgroup", "--d", "-21"])).contains("Z/2 × Z/2"));
    assert_eq!(kzero(&["classgroup", "--d", "12"]).status.code(), Some(2));
}

#[test]
fn unit_subcommand() {
    let s = stdout(&kzero(&["unit", "--d", "10"]));
    assert!(s.contains("fundamental unit: 3 + √10") && s.contains("norm: -1"), "{s}");
    assert!(stdout(&kzero(&["unit", "--d", "5"])).contains("fundamental unit: 1/2 + 1/2√5"));
    assert_eq!(kzero(&["unit", "--d", "-5"]).status.code(), Some(2));
}

#[test]
fn weil_subcommand() {
    let s = stdout(&kzero(&["weil", "--p", "17", "--a", "4", "--b", "-1", "--d", "10"]));
    assert!(s.contains("P_17(x) = x^4 - 8x^3 + 40x^2 - 136x + 289"), "{s}");
    assert!(s.contains("ordinary: true") && s.contains("Stable"));
    let s = stdout(&kzero(&["weil", "--p", "2", "--a", "0", "--b", "1", "--d", "2"]));
    assert!(s.contains("ordinary: false"), "{s}");
    assert_eq!(kzero(&["weil", "--p", "17", "--a", "9", "--b", "0", "--d", "10"]).status.code(), Some(2));
    assert_eq!(kzero(&["weil", "--p", "17", "--a", "1/2", "--b", "0", "--d", "10"]).status.code(), Some(2));
    assert_eq!(kzero(&["weil", "--p", "17", "--a", "x", "--b", "0", "--d", "10"]).status.code(), Some(2));
}

#[test]
fn principal_subcommand() {
    let s = stdout(&kzero(&["principal", "--d", "10", "--a", "2", "--b", "0"]));
    assert!(s.contains("nonprincipal, class [(2, √10)] of order 2"), "{s}");
    let s = stdout(&kzero(&["principal", "--d", "10", "--a", "6", "--b", "4"]));
    assert!(s.contains("principal, generated by 4 + √10"), "{s}");
    assert_eq!(kzero(&["principal", "--d", "10", "--a", "3", "--b", "0"]).status.code(), Some(2));
}
