//! End-to-end runs of the `mathbridge` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixtures().join("golden").join(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mathbridge"))
        .args(args)
        .env_remove("MATHBRIDGE_MAP")
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mathbridge"))
        .args(args)
        .env_remove("MATHBRIDGE_MAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty());
    String::from_utf8(out.stdout).unwrap()
}

/// Runs a failing command, returning its stderr.
fn fails(code: i32, args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

fn temp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("mathbridge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn translate_plus() {
    assert_eq!(ok(&["translate", "--to", "smt2", &fixture("plus.om.xml")]), "(+ x 1)\n");
    assert_eq!(ok(&["translate", "--to", "popcorn", "--sugar", &fixture("plus.om.xml")]), "$x+1\n");
    assert_eq!(ok(&["translate", "--to", "popcorn", &fixture("plus.om.xml")]), "arith1.plus($x,1)\n");
    assert_eq!(ok(&["translate", &fixture("plus.om.xml")]), golden("plus.smt2"));
    assert_eq!(ok(&["translate", "--to", "omxml", &fixture("plus.pop")]), golden("plus.om.xml"));
}

#[test]
fn translate_commutes_both_ways() {
    let commutes = [
        "translate", "--map", &fixture("commutes.map"), "--var-sort", "a=S", "--var-sort", "b=S",
    ];
    let out = ok(&[&commutes[..], &["--to", "smt2", &fixture("commutes_fmp.om.xml")]].concat());
    assert_eq!(out, golden("commutes_fmp.smt2"));
    assert_eq!(out, "(forall ((a S) (b S)) (= (times a b) (times b a)))\n");
    let back = ok(&["translate", "--map", &fixture("commutes.map"), "--to", "omxml", &fixture("commutes.smt2")]);
    assert_eq!(back, golden("commutes_back.om.xml"));
}

#[test]
fn map_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_mathbridge"))
        .args(["translate", "--var-sort", "a=S", "--var-sort", "b=S", &fixture("commutes_fmp.om.xml")])
        .env("MATHBRIDGE_MAP", fixture("commutes.map"))
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("commutes_fmp.smt2"));
}

#[test]
fn stdin_and_output_file() {
    let out = run_stdin(&["translate", "--from", "popcorn", "--to", "smt2", "-"], "$x+1");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(+ x 1)\n");
    let target = temp("out.smt2", "");
    assert_eq!(ok(&["translate", "-o", &target, &fixture("plus.om.xml")]), "");
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "(+ x 1)\n");
}

#[test]
fn desugar_exists_unique() {
    let eq1 = ok(&["desugar", "--exists-unique=eq1", "--to", "popcorn", "--sugar", &fixture("exists_unique.om.xml")]);
    assert_eq!(eq1, golden("exists_unique_eq1.pop"));
    let eq2 = ok(&["desugar", "--exists-unique=eq2", "--to", "popcorn", "--sugar", &fixture("exists_unique.om.xml")]);
    assert_eq!(eq2, golden("exists_unique_eq2.pop"));
}

#[test]
fn desugar_max_forms() {
    assert_eq!(ok(&["desugar", &fixture("max_option2.om.xml")]), golden("max_option2_lowered.om.xml"));
    assert_eq!(ok(&["desugar", &fixture("max_option1.om.xml")]), golden("max_option1_lowered.om.xml"));
    assert_eq!(ok(&["desugar", &fixture("argmax.om.xml")]), golden("argmax_lowered.om.xml"));
    let script = ok(&[
        "desugar", "--var-sort", "x=Real", "--profile", &fixture("reals.profile"), &fixture("argmaxone.om.xml"),
    ]);
    assert_eq!(script, golden("argmaxone_lowered.smt2"));
}

#[test]
fn check_sorts() {
    let sts = ["--sts", &fixture("arith2.sts.xml"), "--sts", &fixture("relation1.sts.xml")];
    let vars = ["--var-sort", "a=S", "--var-sort", "b=S"];
    assert_eq!(ok(&[&["check"][..], &sts, &vars, &[&fixture("commutes_fmp.om.xml")]].concat()), "Bool\n");
    let map = ["--map", &fixture("commutes.map")];
    assert_eq!(ok(&[&["check"][..], &sts, &vars, &map, &[&fixture("commutes.smt2")]].concat()), "Bool\n");

    let unary = temp("unary.smt2", "(times a)");
    let err = fails(5, &[&["check"][..], &sts, &vars, &map, &[&unary]].concat());
    assert!(err.contains("at root") && err.contains("at least 2"), "{err}");

    let int = temp("int.pop", "5");
    assert_eq!(ok(&["check", &int]), "Int\n");
    assert_eq!(ok(&["check", "--profile", &fixture("reals.profile"), &int]), "Real\n");
}

#[test]
fn eval_terms_and_scripts() {
    let grid = ["eval", "--interp", &fixture("grid4.interp")];
    assert_eq!(ok(&[&grid[..], &[&fixture("max_option1.om.xml")]].concat()), "1/4\n");
    assert_eq!(ok(&[&grid[..], &[&fixture("max_option2.om.xml")]].concat()), "1/4\n");
    assert_eq!(ok(&[&grid[..], &[&fixture("argmax.om.xml")]].concat()), "{1/2}\n");
    assert_eq!(
        ok(&["eval", "--interp", &fixture("real_grid.interp"), &fixture("argmaxone.smt2")]),
        "sat\n((x (/ 1 2)))\n"
    );
    assert_eq!(
        ok(&["eval", "--interp", &fixture("small_int.interp"), &fixture("argmin.smt2")]),
        "sat\n((x 0) (y 2))\n"
    );
    assert_eq!(ok(&["eval", &fixture("unsat.smt2")]), "unsat\n");
}

#[test]
fn exit_codes_partition_failures() {
    assert!(fails(1, &["translate", "--bogus"]).contains("Usage"));
    fails(1, &["translate", "/nonexistent/input.om.xml"]);

    let bad = temp("bad.smt2", "(+ x\n  (* y");
    let err = fails(2, &["translate", &bad]);
    assert!(err.starts_with(&format!("{bad}:")), "{err}");
    // The innermost unclosed parenthesis.
    assert!(err.contains(":2:3:"), "{err}");
    fails(2, &["translate", &temp("bad.om.xml", "<OMOBJ")]);

    assert!(fails(3, &["translate", "--to", "smt2", &fixture("max_option1.om.xml")]).contains("lambda"));
    assert!(fails(4, &["translate", "--to", "smt2", &fixture("argmax.om.xml")]).contains("lowered"));
    fails(4, &["desugar", &temp("eu2.pop", "quant2.exists_unique[$x,$y] -> fixture.P($x,$y)")]);
    fails(5, &["check", &temp("untyped.pop", "arith1.plus($x, 1)")]);
    assert!(fails(6, &["eval", &fixture("max_option1.om.xml")]).contains("grid"));
}

#[test]
fn runs_are_deterministic() {
    let args = ["eval", "--interp", &fixture("small_int.interp"), &fixture("argmin.smt2")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["desugar", "--exists-unique=eq2", &fixture("exists_unique.om.xml")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
