use std::process::{Command, Output};

fn rmdesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmdesign")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = rmdesign(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn rm1_weight_enumerator() {
    assert_eq!(ok(&["code", "rm1", "-m", "3", "--wenum"]).trim(), "x^8 + 14*x^4*y^4 + y^8");
    assert_eq!(
        ok(&["code", "rm1", "-m", "4", "--wenum"]).trim(),
        "x^16 + 30*x^8*y^8 + y^16"
    );
}

#[test]
fn ehamming_dimension() {
    assert_eq!(ok(&["code", "ehamming", "-m", "4", "--dim"]).trim(), "11");
}

#[test]
fn hamming_wenum_through_the_dual() {
    let out = ok(&["code", "wenum", "--ehamming", "6", "--max-dim", "20"]);
    // A_4 of the extended Hamming code of length 64 is C(64,3)/4
    assert!(out.starts_with("x^64 + 10416*x^60*y^4 + "), "{out}");
}

#[test]
fn jacobi_checks() {
    assert_eq!(ok(&["jacobi", "--rm1", "3", "--t", "0,1,2,4", "--check"]).trim(), "OK");
    assert_eq!(ok(&["jacobi", "--ehamming", "4", "--class", "dep", "--check"]).trim(), "OK");
    assert_eq!(ok(&["jacobi", "--rm1", "6", "--class", "indep", "--check"]).trim(), "OK");
}

#[test]
fn jacobi_closed_form_m3() {
    let out = ok(&["jacobi", "--rm1", "3", "--class", "dep", "--closed"]);
    let enumerated = ok(&["jacobi", "--rm1", "3", "--t", "0,1,2,3"]);
    assert_eq!(out, enumerated);
}

#[test]
fn design_check_middle_shell() {
    let out = ok(&["design-check", "--rm1", "4", "--ell", "8", "--t", "3", "--method", "all"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.contains("design, lambda=3")), "{out}");
    let out = ok(&["design-check", "--rm1", "4", "--ell", "8", "--t", "4", "--method", "direct"]);
    assert!(out.contains("not a design"), "{out}");
}

#[test]
fn design_check_json() {
    let out = ok(&["--format", "json", "design-check", "--rm1", "3", "--ell", "4", "--t", "4", "--method", "direct"]);
    let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(v["is_design"], false);
    assert_eq!(v["witness"]["sets"][0], serde_json::json!([0, 1, 2, 4]));
}

#[test]
fn assmus_mattson() {
    assert!(ok(&["assmus-mattson", "--ehamming", "4"]).starts_with("t = 3"));
}

#[test]
fn harmonic_enumerator_and_transform() {
    let out = ok(&["hwe", "--rm1", "3", "--tau", "0,1", "--check-dual"]);
    assert!(out.starts_with("8*x^4*y^4"), "{out}");
    assert_eq!(ok(&["bachoc", "--poly", "8*x^4*y^4", "--n", "8", "--k", "4", "--size", "16"]).trim(), "8*x^4*y^4");
}

#[test]
fn harm_basis_dimension() {
    let out = ok(&["harm-basis", "--n", "6", "--k", "2"]);
    assert!(out.starts_with("dim Harm_2(6) = 9"), "{out}");
}

#[test]
fn verify_targets_pass() {
    ok(&["verify", "thm11", "--m", "3..5"]);
    ok(&["verify", "lemma31", "--m", "3..6"]);
    let out = ok(&["verify", "thm12", "--m", "3..4"]);
    assert!(out.contains("discrepancy"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(rmdesign(&["code", "rm1", "-m", "0"]).status.code(), Some(2));
    assert_eq!(rmdesign(&["jacobi", "--rm1", "3", "--t", "0,1,2,8"]).status.code(), Some(2));
    assert_eq!(rmdesign(&["code", "wenum", "--ehamming", "9", "--max-dim", "8"]).status.code(), Some(3));
    assert_eq!(rmdesign(&["code", "rm1", "-m", "30", "--wenum"]).status.code(), Some(3));
    assert_eq!(rmdesign(&["code", "wenum"]).status.code(), Some(2));
}

#[test]
fn file_input_round_trip() {
    let dir = std::env::temp_dir().join(format!("rmdesign-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = dir.join("g.txt");
    std::fs::write(&g, ok(&["code", "rm1", "-m", "3"])).unwrap();
    let from_file = ok(&["code", "wenum", "--file", g.to_str().unwrap()]);
    assert_eq!(from_file.trim(), "x^8 + 14*x^4*y^4 + y^8");
    let dual = ok(&["code", "dual", "--file", g.to_str().unwrap(), "--dim"]);
    assert_eq!(dual.trim(), "4");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_reproducible() {
    let args = ["--format", "json", "verify", "corollary", "--m", "3", "--seed", "7"];
    let a = rmdesign(&args);
    let b = rmdesign(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["--threads", "1", "jacobi", "--ehamming", "4", "--class", "indep"];
    let c = ok(&args);
    let d = ok(&["--threads", "4", "jacobi", "--ehamming", "4", "--class", "indep"]);
    assert_eq!(c, d);
}
