use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl-nichols"))
        .args(args)
        .output()
        .expect("run cli")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table1_matches_golden() {
    let o = run(&["table1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/table1.txt"));
    let o = run(&["table1", "--json"]);
    assert_eq!(stdout(&o), include_str!("golden/table1.json"));
}

#[test]
fn finiteness_json_matches_golden() {
    let o = run(&["finiteness", "--type", "B", "--n", "3", "--sigma", "[1,0,0];()", "--chi", "1,0,0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/finiteness_b3.json"));
    let o = run(&["finiteness", "--type", "B", "--n", "3", "--sigma", "[1,0,0];()", "--chi", "1,0,0"]);
    assert_eq!(stdout(&o), "Finite (Theorem 2.3: W_chi = W_sigma, f odd)\n");
}

#[test]
fn classes_rows() {
    let o = run(&["classes", "--type", "B", "--n", "3"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    let sizes: u64 = text
        .lines()
        .map(|l| l.split_whitespace().last().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(sizes, 48);
    let o = run(&["classes", "--type", "D", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["classes"].as_array().unwrap().len(), 13);
}

#[test]
fn exit_codes() {
    let bad_literal = run(&["conjugate-test", "--n", "3", "[1,0;()", "[0,0,0];()"]);
    assert_eq!(bad_literal.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_literal.stderr).contains("position"));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    let not_conjugate = run(&["conjugator", "--n", "2", "[1,0];(1 2)", "[0,0];(1 2)"]);
    assert_eq!(not_conjugate.status.code(), Some(2));
    let not_in_a = run(&["braiding", "--n", "3", "--sigma", "[0,0,0];(1 2)", "--chi", "1,0,0"]);
    assert_eq!(not_in_a.status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "appendix", "--max-n", "3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "squarecomm", "--max-n", "4"]).status.code(), Some(3));
}

#[test]
fn element_queries() {
    assert_eq!(stdout(&run(&["conjugate-test", "--n", "2", "[1,0];(1 2)", "[0,1];(1 2)"])), "true\n");
    let g = stdout(&run(&["conjugator", "--type", "D", "--n", "4", "[1,1,0,0];(1 2)", "[0,0,1,1];(3 4)"]));
    assert!(g.starts_with('['));
    let c = stdout(&run(&["centralizer", "--n", "3", "[1,0,0];()"]));
    assert!(c.starts_with("order 16"));
    let t = stdout(&run(&["transfer", "--type", "D", "--n", "4", "[0,0,0,0];(1 2)(3 4)"]));
    assert_eq!(t, "CentralizersEqual\n");
    let s = stdout(&run(&["sqcomm", "--type", "S", "--n", "3", "[0,0,0];(1 2 3)", "[0,0,0];(1 2 3)"]));
    assert_eq!(s, "true\n");
}

#[test]
fn finiteness_multi() {
    let o = run(&[
        "finiteness-multi", "--n", "3", "--json",
        "--summand", "[1,0,0];()|1,0,0|1",
        "--summand", "[1,0,0];()|1,0,0|2",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "Finite");
    assert_eq!(v["rule"], "Theorem 3.4");
}

#[test]
fn braiding_report() {
    let o = run(&["braiding", "--n", "3", "--sigma", "[1,0,0];()", "--chi", "1,0,0"]);
    let text = stdout(&o);
    assert!(text.contains("finite: true"), "{text}");
    assert!(text.contains("A_1"));
}
