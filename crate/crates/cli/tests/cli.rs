use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthoinv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn golden_outputs() {
    for (args, expected) in [
        (&["sigmatr", "--t", "0", "--r", "1"][..], "-1*s1(y z)+1*s1(y z')\n"),
        (&["sigmatr", "--t", "2", "--r", "0"][..], "1*s2(x)\n"),
        (&["sigmatr", "--t", "0", "--r", "0"][..], "1\n"),
        (&["power", "--t", "1", "--l", "2"][..], "1*s1(A)^2-2*s2(A)\n"),
        (&["amitsur", "--t", "2", "--p", "2"][..], "1*s1(A1)*s1(A2)-1*s1(A1 A2)+1*s2(A1)+1*s2(A2)\n"),
        (&["normalize", "s2(x1+x2)"][..], "1*s1(x1)*s1(x2)-1*s1(x1 x2)+1*s2(x1)+1*s2(x2)\n"),
        (&["normalize", "s1(x1 x2)-s1(x2' x1')"][..], "0\n"),
        (&["normalize", "-s1(x1)+s1(x1')"][..], "0\n"),
        (&["newton", "--t", "2"][..], "1/2*s1(A)^2-1/2*s1(A A)\n"),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn substitution() {
    let o = run(&["sigmatr", "--t", "0", "--r", "1", "--subst", "x1,x2,x2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1*s1(x2)^2+1*s1(x2 x2')+2*s2(x2)\n");
}

#[test]
fn parse_errors_exit_2_with_grammar() {
    let o = run(&["normalize", "s2(x1+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("grammar"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["amitsur", "--t", "0", "--p", "1"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let o = run(&["normalize", "s1(x1)", "--field", "fp:9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["normalize", "s1(x1)", "--field", "fp:2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p must be odd"), "{}", stderr(&o));
    let path = scratch("even.json", r#"{"n":1,"d":1,"field":{"type":"Fp","p":4},"matrices":[[[1]]]}"#);
    let o = run(&["eval", "--expr", "s1(x1)", "--matrices", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p must be odd"), "{}", stderr(&o));
}

#[test]
fn eval_and_verification_failure() {
    let path = scratch("pair.json", r#"{"n":2,"d":2,"field":{"type":"Q"},"matrices":[[[1,"1/2"],[0,3]],[[2,0],[-1,1]]]}"#);
    let p = path.to_str().unwrap();
    let o = run(&["eval", "--expr", "s2(x1+x2)", "--matrices", p, "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // A1 + A2 = [[3, 1/2], [-1, 4]], determinant 12 + 1/2.
    assert_eq!(stdout(&o), "25/2\n");
    let o = run(&["eval", "--expr", "s1(x1 x2)-s1(x2 x1)", "--matrices", p, "--expect-zero"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["eval", "--expr", "s1(x1 x2)-s1(x1 x2')", "--matrices", p, "--expect-zero"]);
    assert_eq!(o.status.code(), Some(1));
    // σ_{0,1}(x, y, z) on 2x2 matrices need not vanish.
    let o = run(&["eval", "--expr", "-s1(x2 x1)+s1(x2 x1')", "--matrices", p, "--expect-zero"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn relation_sweep_records_seed() {
    let o = run(&["verify-relations", "--n", "2", "--d", "1", "--samples", "5", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("seed=7") && out.contains("failures=0"), "{out}");
    let o = run(&["verify-relations", "--n", "1", "--d", "1", "--samples", "3", "--extra", "x1+x1'", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn generator_ledger_json() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ledger.json");
    let o = run(&["analyze-generators", "--n", "2", "--d", "1", "--max-deg", "4", "--seed", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 4);
    assert_eq!(v["degrees"][0]["new_generator_count"], 1);
}
