use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zchain"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> Value {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn generated(args: &[&str]) -> String {
    String::from_utf8(run(args, None).stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_pipes_into_verify() {
    let o = generated(&["gen", "octahedron"]);
    let report = json(&["verify", "-"], Some(&o));
    assert_eq!(report["k"], 4);
    assert_eq!(report["taus"].as_array().unwrap().len(), 16);
    assert_eq!(report["theorem1_holds"], true);
    assert_eq!(report["sphere_simplification_holds"], true);
}

#[test]
fn verify_respects_the_zigzag_limit() {
    let t = generated(&["gen", "torus", "3", "3"]);
    let out = run(&["verify", "-", "--max-k", "5"], Some(&t));
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err["error"], "TooManyZigzags");
}

#[test]
fn torus_tau2_chain_has_period_three() {
    let t = generated(&["gen", "torus", "3", "3"]);
    let chain = json(&["chain", "-", "--named", "tau2", "--stationary"], Some(&t));
    assert_eq!(chain["period"], 3);
    assert_eq!(chain["ergodic"], false);
    // every vertex of the torus grid has degree 6 out of 2E = 54
    for (_, p) in chain["stationary"].as_object().unwrap() {
        assert_eq!(p, "1/9");
    }
}

#[test]
fn simulation_is_seeded() {
    let o = generated(&["gen", "octahedron"]);
    let args = ["chain", "-", "--named", "tau1", "--simulate", "2000", "--seed", "11"];
    let a = run(&args, Some(&o)).stdout;
    let b = run(&args, Some(&o)).stdout;
    assert_eq!(a, b);
    let c = run(
        &["chain", "-", "--named", "tau1", "--simulate", "2000", "--seed", "12"],
        Some(&o),
    )
    .stdout;
    assert_ne!(a, c);
}

#[test]
fn missing_file_is_a_parse_error() {
    let out = run(&["classify", "/nonexistent/x.tri", "--named", "tau1"], None);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err["error"], "ParseError");
}

#[test]
fn malformed_tri_is_rejected() {
    let out = run(&["info", "-"], Some("a b c\na b\n"));
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err["error"], "ParseError");
}

#[test]
fn zor_file_and_bits_agree() {
    let dir = tempfile::tempdir().unwrap();
    let o = write(dir.path(), "o.tri", &generated(&["gen", "octahedron"]));
    let zor = write(dir.path(), "t.zor", "k 4\n0110\n");
    let from_file = json(&["classify", &o, "--zor", &zor], None);
    let from_bits = json(&["classify", &o, "--tau", "0110"], None);
    assert_eq!(from_file, from_bits);

    let out = run(&["classify", &o, "--tau", "011"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn named_orientations_classify_as_expected() {
    let o = generated(&["gen", "octahedron"]);
    let c1 = json(&["classify", "-", "--named", "tau1"], Some(&o));
    assert_eq!(c1["all_type1"], true);
    let c2 = json(&["classify", "-", "--named", "tau2"], Some(&o));
    assert_eq!(c2["all_type2"], true);
}

#[test]
fn connected_sum_of_octahedra() {
    let dir = tempfile::tempdir().unwrap();
    let o = write(dir.path(), "o.tri", &generated(&["gen", "octahedron"]));
    let out = dir.path().join("sum.tri");
    let status = run(
        &[
            "consum",
            &o,
            "a1,a2,a3",
            &o,
            "a1,a2,a3",
            "--map",
            "a1:a1,a2:a2,a3:a3",
            "-o",
            out.to_str().unwrap(),
        ],
        None,
    );
    assert!(status.status.success());
    let info = json(&["info", out.to_str().unwrap()], None);
    assert_eq!(info["vertex_count"], 9);
    assert_eq!(info["euler_characteristic"], 2);
}

#[test]
fn connected_sum_of_tori_uses_semicolons() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.tri", &generated(&["gen", "torus", "3", "3"]));
    let sum = run(
        &[
            "consum",
            &t,
            "0,0;1,0;0,1",
            &t,
            "0,0;1,0;0,1",
            "--map",
            "0,0:0,0;1,0:1,0;0,1:0,1",
        ],
        None,
    );
    assert!(sum.status.success());
    let info = json(&["info", "-"], Some(&String::from_utf8(sum.stdout).unwrap()));
    assert_eq!(info["euler_characteristic"], -2);
}

#[test]
fn colour_with_factor() {
    let o = generated(&["gen", "octahedron"]);
    let c = json(&["color", "-", "--factor"], Some(&o));
    assert_eq!(c["colorable"], true);
    assert_eq!(c["factor"].as_array().unwrap().len(), 2);
    assert_eq!(c["bipartite_without"], true);
    let t = generated(&["gen", "torus", "4", "3"]);
    assert_eq!(json(&["color", "-"], Some(&t))["colorable"], false);
}

#[test]
fn subdivide_and_lift() {
    let o = generated(&["gen", "octahedron"]);
    let named = json(&["classify", "-", "--named", "tau2"], Some(&o));
    let bits = named["tau"].as_str().unwrap().to_string();
    let lift = json(&["subdivide", "-", "--lift", &bits], Some(&o));
    assert_eq!(lift["vertices"], 14);
    assert_eq!(lift["faces"], 24);
    assert_eq!(lift["all_type1"], true);
    assert_eq!(lift["ergodic"], true);

    let t = run(&["subdivide", "-"], Some(&o));
    let info = json(&["info", "-"], Some(&String::from_utf8(t.stdout).unwrap()));
    assert_eq!(info["face_count"], 24);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"], None).status.code(), Some(2));
    assert_eq!(run(&["gen", "torus", "3"], None).status.code(), Some(2));
}

#[test]
fn small_grid_is_rejected() {
    let out = run(&["gen", "torus", "2", "3"], None);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err["error"], "GridTooSmall");
}
