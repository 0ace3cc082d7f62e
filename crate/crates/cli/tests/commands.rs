use std::process::{Command, Output};

use fockspace::format::from_json;
use fockspace::{LaurentPoly, Multipartition};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn key(s: &str) -> Multipartition {
    fockspace::format::parse_multipartition(s).unwrap()
}

#[test]
fn tau_figure_example() {
    let out = run(&["tau", "--n", "2", "--l", "3", "--charge", "0,0,-1", "--partition", "[4,3,3,2,1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "[[1,1],[1,1],[1]]");

    let back = run(&["tau", "--n", "2", "--l", "3", "--charge", "0,0,-1", "--multipartition", "[[1,1],[1,1],[1]]"]);
    assert_eq!(stdout(&back).trim(), "[4,3,3,2,1]");
}

#[test]
fn tau_rejects_wrong_multicharge() {
    let out = run(&["tau", "--n", "2", "--l", "3", "--charge", "1,0,-2", "--partition", "[4,3,3,2,1]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_example_one() {
    let out = run(&["verify", "--n", "3", "--l", "2", "--charge", "1,0", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "A'(1)=2J ok; Delta'(1)=J*Delta(1) ok");
}

#[test]
fn verify_sweep() {
    let out = run(&["verify", "--n", "2", "--l", "2", "--m", "3", "--sweep", "--radius", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.ends_with("Delta'(1)=J*Delta(1) ok")).count(), 9 * 4);
    assert_eq!(text.lines().last(), Some("all ok"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["verify", "--n", "3", "--l", "2", "--charge", "1,x", "--m", "3"][..],
        &["verify", "--n", "3", "--l", "2", "--charge", "1,0,0", "--m", "3"][..],
        &["canonical", "--n", "0", "--l", "2", "--charge", "1,0", "--m", "3"][..],
        &["tau", "--n", "2", "--l", "1", "--charge", "0", "--partition", "[1,2]"][..],
        &["jantzen", "--n", "3", "--l", "2", "--charge", "1,0", "--m", "2"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn canonical_latex_example_two() {
    let out = run(&["canonical", "--n", "3", "--l", "2", "--charge", "4,-3", "--m", "3", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\\bigl( (2,1),\\emptyset \\bigr)"));
    assert_eq!(text.lines().filter(|l| l.ends_with("& . \\\\")).count(), 9);
    assert_eq!(text.lines().filter(|l| l.contains("\\bigl(")).count(), 10);
}

#[test]
fn canonical_json_example_two() {
    let out = run(&["canonical", "--n", "3", "--l", "2", "--charge", "4,-3", "--m", "3", "--format", "json"]);
    let doc = from_json(&stdout(&out)).unwrap();
    let delta = doc.matrix::<LaurentPoly>().unwrap();
    let q = |e| LaurentPoly::q_pow(e);
    assert_eq!(delta.get(&key("[[1],[1,1]]"), &key("[[2,1],[]]")), Some(&q(2)));
    assert_eq!(delta.get(&key("[[],[1,1,1]]"), &key("[[1],[1,1]]")), Some(&q(2)));
    assert_eq!(delta.get(&key("[[],[2,1]]"), &key("[[],[3]]")), Some(&q(1)));
    assert_eq!(delta.get(&key("[[1,1],[1]]"), &key("[[3],[]]")), Some(&LaurentPoly::zero()));
    assert_eq!(doc.entries.len(), 10 + 14);
}

#[test]
fn jantzen_orderings_and_csv() {
    let base = ["jantzen", "--n", "3", "--l", "2", "--charge", "1,0", "--m", "3", "--format", "csv"];
    let prec = run(&[&base[..], &["--ordering", "prec"]].concat());
    let dom = run(&[&base[..], &["--ordering", "dom"]].concat());
    assert_eq!(prec.status.code(), Some(0));
    assert_eq!(dom.status.code(), Some(0));
    assert_eq!(stdout(&prec).lines().count(), 11);
    assert_eq!(stdout(&dom).lines().count(), 11);
}

#[test]
fn output_is_deterministic() {
    let args = ["barmatrix", "--n", "2", "--l", "3", "--charge", "0,1,-1", "--m", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn order_relations() {
    let out = run(&["order", "--n", "3", "--l", "2", "--charge", "1,0", "--m", "2", "--relations"]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains('\t')).count(), 5);
    assert!(text.lines().any(|l| l == "[[1,1],[]] < [[],[2]]"));
    assert!(!text.lines().any(|l| l.starts_with("[[2],[]] <")));
}
