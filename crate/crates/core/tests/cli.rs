use std::process::Command;

fn qplactic(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qplactic")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

#[test]
fn rs_prints_both_tableaux() {
    let (code, out) = qplactic(&["rs", "2143512"]);
    assert_eq!(code, 0);
    assert_eq!(out, "P = [112/235/4]\nQ = [135/247/6]\n");
    let (code, out) = qplactic(&["rs", "", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], serde_json::json!([]));
}

#[test]
fn plactic_and_qdet() {
    let (code, out) = qplactic(&["plactic", "213", "231"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("true\n"));
    let (_, out) = qplactic(&["plactic", "213", "123"]);
    assert!(out.starts_with("false\n"));
    let (code, out) = qplactic(&["qdet", "-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "t[1,1]*t[2,2] + (-q^-1)*t[1,2]*t[2,1]\n");
    let (code, out) = qplactic(&["qminor", "--rows", "12", "--cols", "23"]);
    assert_eq!(code, 0);
    assert_eq!(out, "t[1,2]*t[2,3] + (-q^-1)*t[1,3]*t[2,2]\n");
}

#[test]
fn straighten_reports_match() {
    let (code, out) = qplactic(&["straighten", "213", "312", "-n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("q=0 class: ([13/2]|[12/3])"), "{out}");
    assert!(out.ends_with("match: true\n"));
    let (code, out) = qplactic(&["straighten", "1", "1", "-n", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("q=0 class: ([1]|[1])"), "{out}");
}

#[test]
fn crystal_dot_is_stable() {
    let a = qplactic(&["crystal", "--shape", "2,1", "-n", "3", "--dot"]);
    let b = qplactic(&["crystal", "--shape", "2,1", "-n", "3", "--dot"]);
    assert_eq!(a, b);
    assert!(a.1.starts_with("digraph {\n"));
    assert_eq!(a.1.matches(" -> ").count(), 8);
    let (code, _) = qplactic(&["crystal", "--seed", "12", "-n", "3"]);
    assert_eq!(code, 2, "12 is not a highest weight word");
}

#[test]
fn verify_exit_codes() {
    let (code, out) = qplactic(&["verify", "figures"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS figures"));
    let (code, out) = qplactic(&["verify", "theorem1", "-n", "2", "-k", "3", "--jobs", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["failures"], serde_json::json!([]));
    assert_eq!(qplactic(&["verify"]).0, 2);
    assert_eq!(qplactic(&["verify", "flag", "-n", "7"]).0, 2);
}
