use std::path::PathBuf;
use std::process::{Command, Output};

fn configs() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    assert!(v.len() >= 10);
    v
}

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn gltilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gltilt")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn every_shipped_config_validates_and_checks() {
    for c in configs() {
        let c = c.to_str().unwrap();
        assert_eq!(gltilt(&["validate", c]).status.code(), Some(0), "{c}");
        let o = gltilt(&["check", c]);
        assert_eq!(o.status.code(), Some(0), "{c}");
        let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(r["pass"], true);
        for e in r["conditions2"].as_array().unwrap() {
            assert_eq!(e["dim"], 0, "{c}: {e}");
        }
    }
}

#[test]
fn squid_of_the_plane_example_has_fifteen_nodes() {
    let c = config("p2_two_lines_33.json");
    let o = gltilt(&["squid", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    let nodes = dot.lines().filter(|l| l.trim_start().starts_with('v') && !l.contains("->")).count();
    assert_eq!(nodes, 15);
    let o = gltilt(&["squid", "--format", "json", c.to_str().unwrap()]);
    let q: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(q["vertices"].as_array().unwrap().len(), 15);
}

#[test]
fn tampered_family_fails_with_a_named_entry() {
    let c = config("p2_two_lines_33.json");
    let o = gltilt(&["check", "--shift=1:-3", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("I=[]") && err.contains("J=[1]") && err.contains("i=1"), "{err}");
    let o = gltilt(&["assemble", "--shift=1:-3", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn auto_twist_repairs_a_shift() {
    let c = config("p2_two_lines_33.json");
    let o = gltilt(&["check", "--shift=1:-3", "--auto-twist", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_gltilt"))
        .args(["check", "--shift=1:-3", "--auto-twist", c.to_str().unwrap()])
        .env("GLTILT_MAX_TWIST", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(gltilt(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
    let c = config("p1_three_points.json");
    assert_eq!(gltilt(&["--field", "p4", "squid", c.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gltilt(&["check", "--shift=9:1", c.to_str().unwrap()]).status.code(), Some(2));
    let s = config("sigma0_two_curves.json");
    assert_eq!(gltilt(&["squid", s.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gltilt(&["griddemo", "nothing"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let c = config("p3_hyperplanes.json");
    let a = gltilt(&["squid", c.to_str().unwrap()]);
    let b = gltilt(&["squid", c.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.dot");
    let o = gltilt(&["squid", "--out", out.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(out).unwrap(), a.stdout);
}

#[test]
fn crosscheck_and_cohomology() {
    let c = config("p1_three_points.json");
    let o = gltilt(&["crosscheck", "--field", "p32003", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("full"));
    let o = gltilt(&["crosscheck", "--format", "json", config("p2_two_lines_33.json").to_str().unwrap()]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["pass"], true);
    let o = gltilt(&["cohom", config("p2_line_conic.json").to_str().unwrap(), "--class=-3"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["classes"][0]["h"], serde_json::json!([0, 0, 1]));
}

#[test]
fn grid_demos_pass() {
    for name in ["a2-zero", "a2-identity", "p1-one-point", "p1-two-points"] {
        let o = gltilt(&["griddemo", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = gltilt(&["griddemo", "--format", "json", "--seed", "7", "p1-two-points"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["directions"].as_array().unwrap().len(), 2);
}
