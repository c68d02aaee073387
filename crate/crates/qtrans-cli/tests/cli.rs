//! End-to-end tests of the `qtrans` binary: output formats, JSON round-trips,
//! caps and the exit-code contract (0 success, 1 verification failure,
//! 2 usage error).

use std::process::{Command, Output};

use qtrans::indexset::{Partition, SkewShape};
use qtrans::transition::{
    expand_skew, transition_matrix, Basis, BuildOptions, Expansion, TransitionMatrix,
};

fn qtrans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtrans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qtrans_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qtrans"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn matrix_text_matches_reference_grid() {
    let out = qtrans(&["matrix", "--from", "P", "--to", "G", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("M(P,G), n = 4"), "{text}");
    assert!(text.contains("-t^3 + t^2"), "{text}");
    assert!(text.contains("1111"), "{text}");
}

#[test]
fn matrix_json_round_trips() {
    let out = qtrans(&["matrix", "--from", "K", "--to", "G", "--n", "4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let parsed: TransitionMatrix = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let direct = transition_matrix(
        Basis::Peak,
        Basis::QuasiHallLittlewood,
        4,
        &BuildOptions::default(),
    )
    .unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn matrix_latex_uses_bordermatrix_layout() {
    let out = qtrans(&["matrix", "--from", "s", "--to", "m", "--n", "3", "--format", "latex"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\\bordermatrix"), "{text}");
    assert!(text.contains("\\cr"), "{text}");
}

#[test]
fn expand_text_shows_documented_row() {
    let out = qtrans(&["expand", "--function", "P", "--shape", "2.1", "--basis", "F"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("(1)*F[21]"), "{text}");
    assert!(text.contains("(1)*F[12]"), "{text}");
    assert!(text.contains("(-t^2 - t)*F[111]"), "{text}");
}

#[test]
fn expand_digit_shorthand_warns_and_agrees() {
    let dotted = qtrans(&["expand", "--function", "P", "--shape", "2.1", "--basis", "F"]);
    let short = qtrans(&["expand", "--function", "P", "--shape", "21", "--basis", "F"]);
    assert_eq!(code(&short), 0);
    assert_eq!(stdout(&short), stdout(&dotted));
    assert!(stderr(&short).contains("warning"), "{}", stderr(&short));
    assert!(stderr(&dotted).is_empty());
}

#[test]
fn expand_json_round_trips() {
    let out = qtrans(&[
        "expand", "--function", "Q", "--shape", "3.2/1", "--basis", "M", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let parsed: Expansion = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let shape = SkewShape::new(
        Partition::new(vec![3, 2]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    )
    .unwrap();
    let direct = expand_skew(Basis::HallLittlewoodQ, &shape, Basis::QuasiMonomial).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn verify_appendix_reports_and_passes() {
    let out = qtrans(&["verify", "--suite", "appendix", "--max-n", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let passes = text.lines().filter(|l| l.starts_with("PASS appendix")).count();
    assert_eq!(passes, 21, "{text}");
    assert!(text.contains("21/21 checks passed"), "{text}");
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["named", "identities", "involution"] {
        let out = qtrans(&["verify", "--suite", suite, "--max-n", "3"]);
        assert_eq!(code(&out), 0, "suite {suite}: {}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"), "{}", stdout(&out));
    }
}

#[test]
fn enumerate_standard_tableaux_with_statistics() {
    let out = qtrans(&["enumerate", "--objects", "syt", "--shape", "3.2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        for field in ["rows", "des", "special", "espec"] {
            assert!(v.get(field).is_some(), "missing {field} in {line}");
        }
    }
}

#[test]
fn enumerate_composition_tableaux() {
    let out = qtrans(&["enumerate", "--objects", "sct", "--shape", "1.3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = qtrans(&[
        "enumerate", "--objects", "ssct", "--shape", "1.3", "--content", "1.1.2",
    ]);
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        assert!(v.get("asc_sum").is_some());
    }
}

#[test]
fn enumerate_starred_tableaux() {
    let out = qtrans(&["enumerate", "--objects", "starred", "--shape", "2.1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // Two standard tableaux, each with one starrable cell.
    assert_eq!(lines.len(), 4);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        assert!(v.get("sign").is_some() && v.get("tstat").is_some(), "{line}");
    }
}

#[test]
fn usage_errors_exit_two() {
    // Unsupported matrix pair.
    assert_eq!(code(&qtrans(&["matrix", "--from", "F", "--to", "s", "--n", "3"])), 2);
    // Unknown basis code.
    assert_eq!(code(&qtrans(&["matrix", "--from", "x", "--to", "m", "--n", "3"])), 2);
    // Over the default cap.
    assert_eq!(code(&qtrans(&["matrix", "--from", "P", "--to", "F", "--n", "8"])), 2);
    // Over the lower cap for the exponential corner.
    assert_eq!(code(&qtrans(&["matrix", "--from", "s", "--to", "P", "--n", "6"])), 2);
    // Inner shape not contained in the outer one.
    assert_eq!(
        code(&qtrans(&["expand", "--function", "P", "--shape", "2.1/3", "--basis", "F"])),
        2
    );
    // Ambiguous shorthand above size 9.
    assert_eq!(
        code(&qtrans(&["expand", "--function", "P", "--shape", "55", "--basis", "F"])),
        2
    );
    // Unknown suite name.
    assert_eq!(code(&qtrans(&["verify", "--suite", "bogus"])), 2);
    // Missing required content.
    assert_eq!(code(&qtrans(&["enumerate", "--objects", "ssct", "--shape", "1.3"])), 2);
    // Unknown subcommand.
    assert_eq!(code(&qtrans(&["frobnicate"])), 2);
}

#[test]
fn caps_respond_to_environment_and_flag() {
    let low = qtrans_env(
        &["matrix", "--from", "P", "--to", "F", "--n", "4"],
        &[("QTRANS_MAX_N", "3")],
    );
    assert_eq!(code(&low), 2);
    assert!(stderr(&low).contains("cap"), "{}", stderr(&low));

    let raised = qtrans_env(
        &["matrix", "--from", "P", "--to", "F", "--n", "4", "--max-n", "4"],
        &[("QTRANS_MAX_N", "3")],
    );
    assert_eq!(code(&raised), 0);

    let heavy_low = qtrans_env(
        &["matrix", "--from", "s", "--to", "P", "--n", "3"],
        &[("QTRANS_MAX_N_HEAVY", "2")],
    );
    assert_eq!(code(&heavy_low), 2);
}
