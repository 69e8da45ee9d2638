//! Black-box checks of the installed binary: stream wiring, stdin
//! input, comment handling, fuzz determinism, and JSON round trips.

use std::io::Write;
use std::process::{Command, Stdio};

use gjx_cli::doc::TraceDocument;

fn gjx(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_gjx"))
        .args(args)
        .output()
        .expect("gjx binary runs")
}

fn data_path(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn dash_reads_the_matrix_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gjx"))
        .args(["invert", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("gjx binary runs");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(b"2 1\n4 3\n")
        .expect("write matrix");
    let output = child.wait_with_output().expect("gjx finishes");
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(output.stdout, b"3/2 -1/2\n-2 1\n");
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let commented = gjx(&["invert", &data_path("comments.txt")]);
    let plain = gjx(&["invert", &data_path("worked2.txt")]);
    assert_eq!(commented.status.code(), Some(0));
    assert_eq!(commented.stdout, plain.stdout);
}

#[test]
fn fuzz_reports_are_deterministic_per_seed() {
    let args = [
        "fuzz", "--trials", "25", "--rows", "3", "--cols", "4", "--seed", "11",
    ];
    let first = gjx(&args);
    let second = gjx(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let other_seed = gjx(&[
        "fuzz", "--trials", "25", "--rows", "3", "--cols", "4", "--seed", "12",
    ]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn fuzz_skips_zero_matrices_with_a_note() {
    let output = gjx(&["fuzz", "--trials", "2", "--max-abs", "0"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).expect("utf-8 report");
    assert!(text.contains("skipped (zero matrix, rank 0)"));
}

#[test]
fn fuzz_passes_a_larger_seeded_run() {
    let output = gjx(&[
        "fuzz",
        "--trials",
        "200",
        "--rows",
        "5",
        "--cols",
        "7",
        "--max-abs",
        "9",
        "--seed",
        "42",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).expect("utf-8 report");
    assert!(
        text.ends_with("fuzz: 200/200 trials passed (shape 5x7, entries in [-9, 9], seed 42)\n")
    );
}

#[test]
fn json_trace_round_trips_through_the_schema_type() {
    let output = gjx(&["eliminate", "--format", "json", &data_path("worked3.txt")]);
    assert_eq!(output.status.code(), Some(0));
    let doc: TraceDocument = serde_json::from_slice(&output.stdout).expect("schema round trip");
    assert_eq!((doc.m, doc.n, doc.rank), (3, 3, 3));
    assert_eq!(doc.steps.len(), 2 * doc.rank);
    for (index, step) in doc.steps.iter().enumerate() {
        assert_eq!(step.q, index + 1);
        assert_eq!(step.kind, if step.q % 2 == 1 { "odd" } else { "even" });
        assert_eq!(step.g.len(), doc.m);
        assert_eq!(step.a.len(), doc.m);
    }
    assert!(doc.verification.is_none());

    let verified = gjx(&["verify", "--format", "json", &data_path("worked3.txt")]);
    let doc: TraceDocument = serde_json::from_slice(&verified.stdout).expect("schema round trip");
    let verification = doc.verification.expect("verify attaches the report");
    assert!(verification.all_match);
}

#[test]
fn help_lists_every_subcommand() {
    let output = gjx(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).expect("utf-8 help");
    for name in ["eliminate", "verify", "arrange", "invert", "minor", "fuzz"] {
        assert!(text.contains(name), "help must mention {name}");
    }
}

#[test]
fn usage_errors_exit_with_the_input_error_code() {
    assert_eq!(gjx(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        gjx(&["eliminate", "--format", "yaml", &data_path("worked2.txt")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gjx(&["verify", "--fault", "bogus", &data_path("worked2.txt")])
            .status
            .code(),
        Some(2)
    );
}
