use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn dhcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dhcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn gen(dir: &TempDir, name: &str, extra: &[&str]) -> String {
    let p = dir.path().join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(extra);
    args.extend_from_slice(&["-o", p.to_str().unwrap()]);
    assert_eq!(code(&dhcolor(&args)), 0);
    p.to_str().unwrap().to_string()
}

#[test]
fn check_reports_witnesses() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "h2.dhg", "e a b > c\ne a b > d\n");
    let o = dhcolor(&["check", &f, "--pattern", "H2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "pattern H2 contained (edges 0 and 1)\n0 1 a:T/T b:T/T\n");
    let o = dhcolor(&["check", &f, "--cond", "lovasz"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "condition lovasz satisfied\n");
}

#[test]
fn check_json() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "h1.dhg", "e a b > c\ne a d > e\n");
    let o = dhcolor(&["--json", "check", &f, "--cond", "onehead-h1"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["avoided"], false);
    assert_eq!(v["witnesses"][0]["common"][0]["vertex"], "a");
    assert_eq!(v["witnesses"][0]["common"][0]["first"], "tail");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.dhg", "e a > a\n");
    assert_eq!(code(&dhcolor(&["check", &bad, "--cond", "lovasz"])), 2);
    let ok = write(&dir, "ok.dhg", "e a b > c\n");
    assert_eq!(code(&dhcolor(&["check", &ok])), 2);
    assert_eq!(code(&dhcolor(&["check", &ok, "--pattern", "X9"])), 2);
    assert_eq!(code(&dhcolor(&["color", &ok, "--algo", "nope"])), 2);
    let missing = dir.path().join("missing.dhg");
    assert_eq!(code(&dhcolor(&["chromatic", missing.to_str().unwrap()])), 2);
    // Patterns need 2→1 edges.
    let wide = write(&dir, "wide.dhg", "e a b c > d\n");
    assert_eq!(code(&dhcolor(&["check", &wide, "--pattern", "H1"])), 2);
}

#[test]
fn color_writes_coloring_and_trace() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "one.dhg", "e a b > c\n");
    let trace = dir.path().join("run.trace");
    let o = dhcolor(&["color", &f, "--algo", "one-head", "--trace", trace.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "a 0\nb 1\nc 0\n");
    assert_eq!(
        fs::read_to_string(&trace).unwrap(),
        "# step pass vertex action edge next\n0 0 a kept - -\n1 0 b colored-red 0 c\n2 0 c kept - -\n"
    );
    let o = dhcolor(&["color", &f, "--algo", "i0r4-2"]);
    assert_eq!(stdout(&o), "a 0\nb 0\nc 1\n");
}

#[test]
fn color_precondition_and_unchecked() {
    let dir = TempDir::new().unwrap();
    let r = gen(&dir, "r.dhg", &["--kind", "paper-r"]);
    let o = dhcolor(&["color", &r, "--algo", "i0r4-2"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition violated"));
    let o = dhcolor(&["color", &r, "--algo", "i0r4-2", "--unchecked"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("proper: false"));
    let out = dir.path().join("r.col");
    let o = dhcolor(&["--json", "color", &r, "--algo", "ht3", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["proper"], true);
    assert_eq!(v["algorithm"], "ht3");
    assert_eq!(fs::read_to_string(out).unwrap().lines().count(), 5);
}

#[test]
fn chromatic_and_witness() {
    let dir = TempDir::new().unwrap();
    let i = gen(&dir, "i.dhg", &["--kind", "paper-i"]);
    let w = dir.path().join("w.col");
    let o = dhcolor(&["chromatic", &i, "--witness", w.to_str().unwrap()]);
    assert_eq!((code(&o), stdout(&o)), (0, "3\n".to_string()));
    let text = fs::read_to_string(&w).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.ends_with(" 0") || l.ends_with(" 1") || l.ends_with(" 2")));
    let o = dhcolor(&["chromatic", &i, "--max-k", "2"]);
    assert_eq!(stdout(&o), ">2\n");
    let o = dhcolor(&["--json", "chromatic", &i]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chi"], 3);
}

#[test]
fn gen_kinds() {
    let dir = TempDir::new().unwrap();
    let t = gen(&dir, "t.dhg", &["--kind", "h2-tower", "--k", "3"]);
    let text = fs::read_to_string(&t).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 7);
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 11);
    assert!(text.contains("v x_3\n"));
    let p = gen(&dir, "p.dhg", &["--kind", "perm-tower", "--k", "3"]);
    assert!(fs::read_to_string(&p).unwrap().contains("e a.u1 b.u3 > x_3_321\n"));
    assert_eq!(code(&dhcolor(&["gen", "--kind", "perm-tower", "--k", "4"])), 2);
    let a = stdout(&dhcolor(&["gen", "--kind", "random", "--n", "7", "--m", "9", "--cond", "i0-free", "--seed", "5"]));
    let b = stdout(&dhcolor(&["gen", "--kind", "random", "--n", "7", "--m", "9", "--cond", "i0-free", "--seed", "5"]));
    assert_eq!(a, b);
    let f = write(&dir, "rand.dhg", &a);
    assert_eq!(code(&dhcolor(&["check", &f, "--cond", "i0-free"])), 0);
    let o = stdout(&dhcolor(&["gen", "--kind", "random", "--n", "4", "--m", "0"]));
    assert_eq!(o, "v v1\nv v2\nv v3\nv v4\n");
}

#[test]
fn bound_and_goodcheck() {
    assert_eq!(stdout(&dhcolor(&["bound", "--n", "4"])), "4\n");
    assert_eq!(stdout(&dhcolor(&["bound", "--n", "0"])), "1\n");
    let dir = TempDir::new().unwrap();
    let p = gen(&dir, "p.dhg", &["--kind", "perm-tower", "--k", "3"]);
    let o = dhcolor(&["goodcheck", &p]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "|E| = 20, f(12) = 116\ngood coloring: valid\n");
    let r3 = write(&dir, "r3.dhg", "e a b > c\ne b c > d\n");
    assert_eq!(code(&dhcolor(&["goodcheck", &r3])), 1);
}

#[test]
fn fuzz_subcommand() {
    let o = dhcolor(&["fuzz", "--algo", "i0-4", "--trials", "50", "--seed", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("i0-4: 50 trials, 0 failures"));
    let o = dhcolor(&["--json", "fuzz", "--algo", "one-head", "--trials", "0"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trials"], 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(code(&dhcolor(&["fuzz", "--algo", "ht3", "--n-min", "2"])), 2);
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_dhcolor"))
        .args(["chromatic", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"e a b > c\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "2\n");
    assert!(Path::new(env!("CARGO_BIN_EXE_dhcolor")).exists());
}
