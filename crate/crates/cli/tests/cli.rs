use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const QUATERNION: &str = "n=8\nx=11110000 perm=(1 5)(2 6)(3 7)(4 8)\nx=10100101 perm=(1 2)(3 4)(5 6)(7 8)\n";
const FOLDED_8: &str = "n=8\nx=11111111 perm=id\n";
const FOLDED_7: &str = "n=7\nx=1111111 perm=()\n";
const TRIVIAL_3: &str = "n=3\n";
const EMPTY_6: &str = "n=6\n";

fn workdir(test: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(test);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn group(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubequot"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn mindist_reports_distance() {
    let dir = workdir("mindist");
    let cases = [
        (QUATERNION, "d_K=4"),
        (EMPTY_6, "d_K=inf"),
        ("n=7\nx=1111111 perm=id\n", "d_K=7"),
        ("n=5\nx=10000 perm=(1 2)(3 4)\n", "d_K=1"),
        ("n=5\nx=11000 perm=(1 2)(3 4)\n", "d_K=0"),
    ];
    for (i, (text, want)) in cases.iter().enumerate() {
        let o = run(&["mindist", &group(&dir, &format!("g{i}.txt"), text)]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(stdout(&o).lines().any(|l| l == *want), "{}", stdout(&o));
    }
}

#[test]
fn mindist_json_is_parseable() {
    let dir = workdir("mindist_json");
    let o = run(&["--format", "json", "mindist", &group(&dir, "q.txt", QUATERNION)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["d_K"], 4);
    assert_eq!(v["even"], true);
}

#[test]
fn quotient_sizes() {
    let dir = workdir("quotient");
    for (text, want) in [
        (TRIVIAL_3, "vertices=8 edges=12"),
        (FOLDED_8, "vertices=128 edges=512"),
        (QUATERNION, "vertices=32 edges=128"),
    ] {
        let o = run(&["quotient", &group(&dir, "g.txt", text)]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(stdout(&o).lines().next(), Some(want));
    }
}

#[test]
fn quotient_dot_and_json() {
    let dir = workdir("quotient_formats");
    let g = group(&dir, "g.txt", TRIVIAL_3);
    let dot = stdout(&run(&["--format", "dot", "quotient", &g]));
    assert!(dot.starts_with("graph"), "{dot}");
    let out = dir.join("q.json");
    let o = run(&["--format", "json", "--out", out.to_str().unwrap(), "quotient", &g]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert!(v.is_object());
}

#[test]
fn halves_verdicts() {
    let dir = workdir("halves");
    let o = run(&["halves", &group(&dir, "q.txt", QUATERNION)]);
    assert_eq!(stdout(&o).lines().last(), Some("NOT_ISOMORPHIC"));
    let o = run(&["halves", &group(&dir, "a.txt", FOLDED_8)]);
    assert_eq!(stdout(&o).lines().last(), Some("ISOMORPHIC"));
    let o = run(&["halves", &group(&dir, "f.txt", FOLDED_7)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[NotBipartite]"), "{}", stderr(&o));
}

#[test]
fn halves_write_both_files() {
    let dir = workdir("halves_out");
    let prefix = dir.join("half");
    let o = run(&["--format", "dot", "--out", prefix.to_str().unwrap(), "halves", &group(&dir, "q.txt", QUATERNION)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "NOT_ISOMORPHIC");
    for i in 0..2 {
        assert!(fs::read_to_string(dir.join(format!("half-{i}.dot"))).unwrap().starts_with("graph"));
    }
}

#[test]
fn params_and_aut() {
    let dir = workdir("params_aut");
    let g = group(&dir, "a.txt", "n=6\nx=111111 perm=id\n");
    let o = run(&["params", &g]);
    assert!(stdout(&o).starts_with("n=6 vertices=32 d_K=6 valency=6"), "{}", stdout(&o));
    let o = run(&["aut", &g]);
    let text = stdout(&o);
    assert!(text.contains("order=23040"), "{text}");
    assert!(text.contains("vertex_transitive=true"), "{text}");
    let o = run(&["aut", "--half", "0", &group(&dir, "b.txt", "n=5\n")]);
    assert!(stdout(&o).contains("order=1920"), "{}", stdout(&o));
}

#[test]
fn verify_selected_claims() {
    let o = run(&["verify", "--claims", "ex-exp-halved"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("ex-exp-halved"));
    assert!(stdout(&o).contains("HOLDS"));

    let o = run(&["verify", "--claims", "lem-trick,nonsense"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[UnknownClaim]"));
    assert!(o.stdout.is_empty());

    let o = run(&["verify", "--list"]);
    assert_eq!(stdout(&o).lines().count(), 27);
}

#[test]
fn example_json_report() {
    let o = run(&["--format", "json", "example", "K2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["status"], "HOLDS");
    assert!(v[0].get("runtime_ms").is_none());

    let o = run(&["example", "nope"]);
    assert!(stderr(&o).starts_with("error[UnknownExample]"), "{}", stderr(&o));
}

#[test]
fn output_is_deterministic() {
    let dir = workdir("determinism");
    let g = group(&dir, "q.txt", QUATERNION);
    for args in [
        vec!["--format", "json", "quotient", g.as_str()],
        vec!["--format", "json", "aut", g.as_str()],
        vec!["--format", "json", "verify", "--claims", "ex-K2,lem-trick"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn usage_and_input_errors() {
    let dir = workdir("errors");
    let g = group(&dir, "a.txt", FOLDED_8);
    let o = run(&["--format", "dot", "mindist", &g]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[Usage]"));
    let o = run(&["bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[Usage]"));
    let o = run(&["mindist", dir.join("missing.txt").to_str().unwrap()]);
    assert!(stderr(&o).starts_with("error[Io]"), "{}", stderr(&o));
    let o = run(&["mindist", &group(&dir, "bad.txt", "n=3\nx=11 perm=id\n")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error["), "{}", stderr(&o));
}
