//! End-to-end tests of the command-line binary: exit codes, text output,
//! structured output, and the round trip back through the report parser.

use std::path::PathBuf;
use std::process::{Command, Output};

use cohomone::report::{ConstraintReport, Verdict};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohomone"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

// ---------------------------------------------------------------------------
// check-diagram
// ---------------------------------------------------------------------------

#[test]
fn check_diagram_confirms_a_valid_diagram() {
    let output = run(&["check-diagram", &fixture("spin7-g2.diagram")]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("note: orientable+ not specified"), "{text}");
    assert!(text.contains("SU(3) ⊆ (SU(4), G2) ⊆ Spin(7)"), "{text}");
    assert!(text.contains("CONFIRMED"), "{text}");
    assert!(
        text.contains("Euler characteristic of the double disc bundle: 2"),
        "{text}"
    );
}

#[test]
fn check_diagram_structured_output_reparses() {
    let output = run(&[
        "check-diagram",
        &fixture("spin7-g2.diagram"),
        "--format",
        "structured",
    ]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(
        !text.contains("note:"),
        "structured output must be pure records: {text}"
    );
    let report = ConstraintReport::parse_structured(&text).expect("round trip");
    assert_eq!(report.verdict(), Verdict::Confirmed);
    assert!(report
        .conclusions()
        .iter()
        .any(|c| c.contains("codimensions (k+, k-) = (8, 7)")));
}

#[test]
fn check_diagram_explicit_flags_print_no_notes() {
    let output = run(&["check-diagram", &fixture("su4-pair.diagram")]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(!text.contains("note:"), "{text}");
    assert!(
        text.contains("Euler characteristic of the double disc bundle: 10"),
        "{text}"
    );
}

#[test]
fn check_diagram_rejects_unknown_keys() {
    let output = run(&["check-diagram", &fixture("bad-key.diagram")]);
    assert_eq!(exit_code(&output), 1);
    let err = stderr(&output);
    assert!(err.contains("unknown key"), "{err}");
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn check_diagram_reports_missing_files_as_errors() {
    let output = run(&["check-diagram", &fixture("does-not-exist.diagram")]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr(&output).contains("cannot read"));
}

#[test]
fn check_diagram_eliminates_a_non_sphere_slice() {
    let output = run(&["check-diagram", &fixture("not-a-sphere.diagram")]);
    assert_eq!(exit_code(&output), 2);
    let text = stdout(&output);
    assert!(text.contains("ELIMINATED"), "{text}");
    assert!(text.contains("FAIL"), "{text}");
    // Text-mode failures carry their citation in brackets.
    assert!(text.contains('['), "{text}");
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

#[test]
fn classify_exit_codes_cover_all_verdicts() {
    let confirmed = run(&["classify", "QP(8,2)"]);
    assert_eq!(exit_code(&confirmed), 0);
    assert!(stdout(&confirmed).contains("CONFIRMED"));

    let eliminated = run(&["classify", "QP(6,2)"]);
    assert_eq!(exit_code(&eliminated), 2);
    assert!(stdout(&eliminated).contains("ELIMINATED"));

    let undetermined = run(&["classify", "S3xS3"]);
    assert_eq!(exit_code(&undetermined), 3);
    assert!(stdout(&undetermined).contains("UNDETERMINED"));

    let unparsable = run(&["classify", "FOO(1)"]);
    assert_eq!(exit_code(&unparsable), 1);
    assert!(stderr(&unparsable).contains("error"));

    // Odd generator degree with truncation beyond a sphere: a domain error,
    // not a verdict.
    let invalid = run(&["classify", "QP(7,2)"]);
    assert_eq!(exit_code(&invalid), 1);
}

#[test]
fn classify_structured_output_reparses_with_citations() {
    let output = run(&["classify", "QP(6,3)", "--format", "structured"]);
    assert_eq!(exit_code(&output), 2);
    let report = ConstraintReport::parse_structured(&stdout(&output)).expect("round trip");
    assert_eq!(report.verdict(), Verdict::Eliminated);
    let failures: Vec<_> = report.steps().iter().filter(|s| !s.passed()).collect();
    assert!(!failures.is_empty());
    assert!(
        failures.iter().all(|s| !s.citation().is_empty()),
        "every refutation must cite a named result"
    );
}

#[test]
fn classify_two_generator_target_lists_the_catalog() {
    let output = run(&["classify", "S2xHP(2)", "--rank-bound", "6"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert_eq!(text.matches("conclusion:").count(), 3, "{text}");
    assert!(text.contains("G2"), "{text}");
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

#[test]
fn tables_frank_structured_rows_are_stable() {
    let output = run(&["tables", "frank", "--format", "structured"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| r.starts_with("row|")));
    assert_eq!(rows[0], "row|SU(3)|S1|-|8|3");
    assert_eq!(rows[6], "row|Spin(7)|SU(3)|-|14|2");
    assert_eq!(
        rows[19],
        "row|SO(2n)|T2.SU(n-2)|n >= 4|n^2 + 3n - 4|n*2^(n-1)"
    );
}

#[test]
fn tables_frank_ratio_filters_are_exact() {
    let equals_two = run(&["tables", "frank", "--ratio", "=2", "--format", "structured"]);
    assert_eq!(exit_code(&equals_two), 0);
    let lines: Vec<String> = stdout(&equals_two).lines().map(String::from).collect();
    assert_eq!(
        lines,
        [
            "match|SO(7)|SU(3)|-|14|8",
            "match|Spin(7)|SU(3)|-|14|8",
            "match|SO(8)|SU(4)|-|14|8",
            "match|SO(10)|S1.SU(4)|-|30|16",
            "tail|certified",
        ]
    );

    let at_least_six = run(&[
        "tables",
        "frank",
        "--ratio",
        "int>=6",
        "--format",
        "structured",
    ]);
    assert_eq!(exit_code(&at_least_six), 0);
    let lines: Vec<String> = stdout(&at_least_six).lines().map(String::from).collect();
    assert_eq!(lines, ["match|Spin(7)|SU(3)|-|14|2", "tail|certified"]);

    let bad_predicate = run(&["tables", "frank", "--ratio", "~3"]);
    assert_eq!(exit_code(&bad_predicate), 1);

    let wrong_table = run(&["tables", "transsphere", "--ratio", "=2"]);
    assert_eq!(exit_code(&wrong_table), 1);
    assert!(stderr(&wrong_table).contains("--ratio applies only"));
}

#[test]
fn tables_transsphere_lists_sphere_actions() {
    let output = run(&["tables", "transsphere", "--format", "structured"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.lines().any(|l| l.starts_with("family|")));
    assert!(text.contains("row|G2|SU(3)|6"), "{text}");
    assert!(text.contains("row|Spin(7)|G2|7"), "{text}");
}

// ---------------------------------------------------------------------------
// fiber-model
// ---------------------------------------------------------------------------

#[test]
fn fiber_model_structured_output_is_exact() {
    let output = run(&["fiber-model", "8", "7", "0", "--format", "structured"]);
    assert_eq!(exit_code(&output), 0);
    let lines: Vec<String> = stdout(&output).lines().map(String::from).collect();
    assert_eq!(
        lines,
        [
            "model|S^7 x S^6 x Omega S^14",
            "homotopy|6,7,11,13,26",
            "connecting|27",
        ]
    );

    // One non-orientable singular orbit needs an even codimension.
    let invalid = run(&["fiber-model", "3", "3", "1"]);
    assert_eq!(exit_code(&invalid), 1);
    assert!(stderr(&invalid).contains("even codimension"));
}

// ---------------------------------------------------------------------------
// usage errors
// ---------------------------------------------------------------------------

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let bogus = run(&["bogus-subcommand"]);
    assert_eq!(
        exit_code(&bogus),
        1,
        "usage errors must not collide with the ELIMINATED code"
    );

    let missing_arg = run(&["classify"]);
    assert_eq!(exit_code(&missing_arg), 1);

    let help = run(&["--help"]);
    assert_eq!(exit_code(&help), 0);
    assert!(stdout(&help).contains("check-diagram"));

    let version = run(&["--version"]);
    assert_eq!(exit_code(&version), 0);
}

// ---------------------------------------------------------------------------
// explain
// ---------------------------------------------------------------------------

#[test]
fn explain_lists_all_keys_and_details_one() {
    let listing = run(&["explain"]);
    assert_eq!(exit_code(&listing), 0);
    let text = stdout(&listing);
    for key in [
        "grove-halperin-fiber",
        "ratio-filter",
        "borel-de-siebenthal",
    ] {
        assert!(text.contains(key), "missing {key} in listing");
    }

    let detail = run(&["explain", "kz-rigidity"]);
    assert_eq!(exit_code(&detail), 0);
    assert!(stdout(&detail).contains("singly generated"));

    let unknown = run(&["explain", "no-such-key"]);
    assert_eq!(exit_code(&unknown), 1);
    assert!(stderr(&unknown).contains("unknown key"));
}
