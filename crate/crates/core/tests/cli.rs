use std::io::Write;
use std::process::{Command, Output, Stdio};

fn atilde(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_atilde"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EXAMP: &str = r#"{"n":4,"perm":[4,2,3,1],"exps":[0,-1,2,-1]}"#;

#[test]
fn documented_examples() {
    let o = atilde(&["reduce", "--n", "4", EXAMP], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t[0] s3 t[2] t[0] s4 s3 t[-1]\n");
    let id = r#"{"n":3,"perm":[1,2,3],"exps":[0,0,0]}"#;
    assert_eq!(stdout(&atilde(&["length", "--n", "3", id], "")), "0\n");
    let o = atilde(
        &["wp", "--n", "3", "--k", "1", "t[2] t[1]", "==", "t[5] t[4]"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(
        atilde(&["wp", "--n", "3", "t[2] t[1]", "==", "t[5] t[3]"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        atilde(&["member", "--n", "3", "t[0] t[2]"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        atilde(&["verify", "--suite", "shi", "--n", "3"], "")
            .status
            .code(),
        Some(0)
    );
    assert_eq!(atilde(&["nosuch"], "").status.code(), Some(2));
    assert_eq!(
        atilde(&["length", "--n", "3"], "t[1] s9\n").status.code(),
        Some(2)
    );
    let o = atilde(&["reduce", "t[1] s3 u[2]"], "");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 9") && err.contains("u[2]"), "{err}");
    assert_eq!(atilde(&["--help"], "").status.code(), Some(0));
}

#[test]
fn deterministic_and_reduce_round_trips() {
    let words = "t[3] s4 t[-2] s3\nt[1]^-1 t[0]\ns3 s4 s3\n";
    let a = atilde(&["reduce", "--n", "4"], words);
    let b = atilde(&["reduce", "--n", "4"], words);
    assert_eq!(a.stdout, b.stdout);
    let reduced = stdout(&a);
    assert_eq!(reduced.lines().count(), 3);
    let m1 = stdout(&atilde(&["eval", "--n", "4"], words));
    let m2 = stdout(&atilde(&["eval", "--n", "4"], &reduced));
    assert_eq!(m1, m2);
    let mats = stdout(&atilde(&["eval", "--n", "4"], words));
    assert_eq!(stdout(&atilde(&["reduce"], &mats)), reduced);
}

#[test]
fn json_envelopes() {
    let o = atilde(
        &["--json", "nf", "--n", "3", "--k", "1"],
        "t[1]^-1 t[1] t[0]\nt[1] t[0] s3 t[1] t[0] s3\n",
    );
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["ok"], true);
    assert_eq!(lines[0]["result"]["factors"][0], "t[0]");
    assert_eq!(lines[1]["result"]["delta_exp"], 1);
    let o = atilde(&["--json", "length", "{\"n\":2"], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["ok"], false);
    assert!(v["error"]["message"].as_str().unwrap().starts_with("json:"));
}

#[test]
fn dot_collapses_t_class() {
    let delta = r#"{"n":3,"perm":[1,2,3],"exps":[-2,1,1]}"#;
    let o = atilde(&["dot", "--k", "1", delta], "");
    let d = stdout(&o);
    assert!(d.starts_with("digraph atoms {"));
    assert_eq!(d.matches("t[*]").count(), 1);
    assert!(d.trim_end().ends_with('}'));
}

#[test]
fn meet_and_join() {
    let o = atilde(&["join", "--n", "5", "s3", "s5"], "");
    assert_eq!(stdout(&o), "s3 s5\n");
    let o = atilde(
        &["join", "--n", "3", "--k", "2", "--right"],
        "t[4] | t[-1]\n",
    );
    assert_eq!(stdout(&o), "t[2] t[0]\n");
    let o = atilde(&["meet", "--n", "3", "--k", "1"], "t[1] t[0] | t[5] t[4]\n");
    assert_eq!(stdout(&o), "t[1] t[0]\n");
}
