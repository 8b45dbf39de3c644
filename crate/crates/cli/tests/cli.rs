use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn normal_form_of_y_times_x() {
    let out = stdout(&[
        "nf",
        "--n",
        "2",
        "--kappa",
        "1",
        "--algebra",
        "rat",
        "--expr",
        "y1*x1",
    ]);
    assert_eq!(out, "x1*y1 + 1 + s12");
}

#[test]
fn normal_form_json_carries_terms() {
    let out = stdout(&[
        "nf", "--n", "2", "--kappa", "1", "--expr", "y1*x1", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["normal_form"], "x1*y1 + 1 + s12");
    assert_eq!(v["algebra"], "rat");
}

#[test]
fn classify_two_at_one() {
    let out = stdout(&["classify", "--n", "2", "--kappa", "1"]);
    assert_eq!(out, "[2]: in (witness 0)\n[1,1]: out (witness -1)");
}

#[test]
fn classify_csv_with_coherence() {
    let out = stdout(&[
        "classify",
        "--n",
        "2",
        "--kappa",
        "-1",
        "--check-dmax",
        "3",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "lambda,verdict,witness,first_failure,consistent");
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn jack_closed_form() {
    let out = stdout(&["jack", "--n", "2", "--kappa", "2", "--mu", "[0,1]"]);
    assert_eq!(out, "x2 + 1/3*x1\nweight (0,3)");
}

#[test]
fn dunkl_action() {
    assert_eq!(
        stdout(&["act", "--n", "2", "--kappa", "1", "--op", "Y1", "--poly", "x1^2"]),
        "3*x1 + x2"
    );
}

#[test]
fn iota_ab_of_u() {
    let out = stdout(&[
        "embed", "--n", "2", "--kappa", "1", "--map", "iota-ab", "--a", "1/2", "--b", "-3",
        "--expr", "u1",
    ]);
    assert_eq!(out, "x1*y1 + 1/2*x1 - 3*y1");
}

#[test]
fn singular_vector_at_minus_two() {
    let out = stdout(&[
        "singular", "--n", "2", "--kappa", "-2", "--lambda", "[2]", "--dmax", "2",
    ]);
    assert_eq!(out, "d=1: x1 - x2");
}

#[test]
fn relation_checks_report_success() {
    for target in ["rat", "locrat", "trig", "pi", "iota", "jmath", "sigma"] {
        let out = stdout(&["relcheck", "--n", "3", "--kappa", "5/3", "--target", target]);
        assert!(out.ends_with(" 0 failed"), "{target}: {out}");
    }
}

#[test]
fn induced_slices_are_shift_closed() {
    let out = stdout(&[
        "induce", "--n", "2", "--kappa", "-2", "--lambda", "[1,1]", "--dmax", "1", "--kmin", "-1",
        "--kmax", "1",
    ]);
    assert!(out.ends_with("shift-closed: true; n-fold shift adds kappa: true"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["nf", "--n", "2", "--kappa", "1", "--expr", "x1**"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["nf", "--n", "2", "--kappa", "0.5", "--expr", "x1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nf", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["jack", "--n", "2", "--kappa", "-1", "--mu", "[0,1]"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["nf", "--n", "2", "--kappa", "0", "--expr", "x1"])
            .status
            .code(),
        Some(1)
    );
}
