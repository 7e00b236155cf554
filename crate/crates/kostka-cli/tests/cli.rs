//! End-to-end tests for the `kostka` binary: every verb is exercised through
//! a real process, checking stdout bytes, stderr diagnostics, and exit codes.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

/// The running example used throughout: a tableau of content (3,3,3,3,2,2,2)
/// compatible with the sequence 2x3,2x3,3x2.
const RUNNING_S: &str = "1 1 1 3 4 5\n2 2 2 4 5 6\n3 3 6\n4 7 7\n";

/// The unique tableau of shape (5,4,3,3,2,1) compatible with 4x3,2x3, and its
/// image under the embedding into 3x3,3x3.
const IOTA_T: &str = "1 1 1 5 5\n2 2 2 6\n3 3 3\n4 4 4\n5 6\n6\n";
const IOTA_T_PRIME: &str = "1 1 1 4 4\n2 2 2 5\n3 3 3\n4 5 6\n5 6\n6\n";

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kostka"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("spawn kostka");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).expect("write stdin");
    }
    child.wait_with_output().expect("wait for kostka")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn lrt_enumerate_prints_the_unique_tableau() {
    let out = run(&["lrt", "enumerate", "--shape", "5,4,3,3,2,1", "--rects", "4x3,2x3"], None);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), IOTA_T);
}

#[test]
fn lrt_enumerate_separates_tableaux_with_blank_lines() {
    let out = run(&["lrt", "enumerate", "--shape", "2,1", "--rects", "1x1,1x1,1x1"], None);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 2, "{text}");
    for block in blocks {
        assert_eq!(block.trim_end_matches('\n').lines().count(), 2);
    }
}

#[test]
fn poly_kostka_prints_a_monomial() {
    let out = run(&["poly", "kostka", "--shape", "5,4,3,3,2,1", "--rects", "4x3,2x3"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "q^3\n");
}

#[test]
fn poly_kf_matches_the_classical_value() {
    let out = run(&["poly", "kf", "--shape", "2,1", "--mu", "1,1,1"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "q + q^2\n");
}

#[test]
fn poly_dual_passes_for_a_dominant_sequence() {
    let out = run(&["poly", "dual", "--rects", "2x2,1x1"], None);
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().last() == Some("PASS"), "{text}");
    assert!(text.contains(" ok"), "{text}");
}

#[test]
fn poly_mono_passes_for_a_comparable_pair() {
    let out = run(&["poly", "mono", "--greater", "2x2", "--smaller", "1x2,1x2"], None);
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    assert!(stdout(&out).lines().last() == Some("PASS"));
}

#[test]
fn poly_mono_rejects_incomparable_sequences() {
    let out = run(&["poly", "mono", "--greater", "1x2", "--smaller", "2x1"], None);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).starts_with("error:"), "{}", stderr(&out));
}

#[test]
fn ctype_reads_from_stdin() {
    let out = run(&["ctype"], Some(RUNNING_S));
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "(); (3); (2,2)\n");
}

#[test]
fn ctype_reads_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.tab");
    std::fs::write(&path, RUNNING_S).unwrap();
    let out = run(&["ctype", path.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(); (3); (2,2)\n");
}

#[test]
fn catabolize_trace_prints_each_key_removal() {
    let out = run(
        &["catabolize", "--rects", "2x3,2x3,3x2", "--mode", "row", "--trace", "-"],
        Some(RUNNING_S),
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let want = "step 1: removed the 2x3 key at letter 1\n\
                3 3 3 6 7\n4 4 4 7\n5 5\n6\n\n\
                step 2: removed the 2x3 key at letter 3\n\
                5 5\n6 6\n7 7\n\n\
                step 3: removed the 3x2 key at letter 5\n\
                (empty)\n\n\
                catabolizable\n";
    assert_eq!(stdout(&out), want);
}

#[test]
fn catabolize_answers_no_without_failing() {
    // content is right but the letters 1,2 do not fill the 2x3 key
    let out = run(&["catabolize", "--rects", "2x3", "--mode", "col"], Some("1 1 1 2\n2 2\n"));
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("not catabolizable:"), "{text}");
    assert!(text.contains("step 1"), "{text}");
}

#[test]
fn transpose_prints_the_shape_transposed_partner() {
    let t = "1 1 1 3 3 5\n2 2 2 4 5 6\n3 4 6\n4 7 7\n";
    let out = run(&["transpose", "--rects", "2x3,2x3,3x2"], Some(t));
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "1 1 4 4\n2 2 5 7\n3 3 7 8\n5 6\n6 7\n8 8\n");
}

#[test]
fn embed_apply_reproduces_the_row_move() {
    let out = run(&["embed", "apply", "--from", "4x3,2x3", "--to", "3x3,3x3"], Some(IOTA_T));
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), IOTA_T_PRIME);
}

#[test]
fn embed_image_test_answers_true_and_false() {
    let yes = run(&["embed", "image-test", "--rects", "2x1"], Some("1\n2\n"));
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes), "true\n");

    let no = run(&["embed", "image-test", "--rects", "2x1"], Some("1 2\n"));
    assert_eq!(code(&no), 0);
    assert_eq!(stdout(&no), "false\n");
}

#[test]
fn poset_export_dot_labels_nodes_with_grades() {
    let out = run(
        &["poset", "export", "--rects", "1x1,1x1,1x1", "--order", "cocyclage", "--format", "dot"],
        None,
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("digraph {"), "{text}");
    assert!(text.contains("grade 0"), "{text}");
    assert!(text.trim_end().ends_with('}'), "{text}");
}

#[test]
fn poset_export_json_is_well_formed() {
    let out = run(
        &["poset", "export", "--rects", "1x2,1x1", "--order", "cyclage", "--format", "json"],
        None,
    );
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(v.get("nodes").is_some() && v.get("covers").is_some(), "{v}");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args =
        ["poset", "export", "--rects", "1x2,2x1", "--order", "strong", "--format", "json"];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    let args = ["lrt", "enumerate", "--shape", "3,2,1", "--rects", "1x2,1x2,1x1,1x1"];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_small_catalog_passes() {
    let out = run(&["verify", "charge-comp", "--max-cells", "4"], None);
    assert_eq!(code(&out), 0, "stdout: {}\nstderr: {}", stdout(&out), stderr(&out));
    assert!(stdout(&out).starts_with("PASS charge-comp:"), "{}", stdout(&out));
}

#[test]
fn verify_unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "no-such-suite"], None);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).starts_with("error:"), "{}", stderr(&out));
}

#[test]
fn malformed_rects_are_a_usage_error() {
    let out = run(&["poly", "kostka", "--shape", "2", "--rects", "bogus"], None);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("malformed rect spec"), "{}", stderr(&out));
}

#[test]
fn malformed_tableau_is_a_usage_error() {
    let out = run(&["ctype"], Some("1 x\n"));
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("malformed tableau"), "{}", stderr(&out));
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let out = run(&[], None);
    assert_eq!(code(&out), 2);
}
