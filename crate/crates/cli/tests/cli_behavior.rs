//! End-to-end tests of the `clusterchar` binary: exit codes, stable RESULT
//! lines and deterministic output.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clusterchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> String {
    let path = std::env::temp_dir().join(format!("clusterchar-test-{name}"));
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn verify_ar_passes_on_all_indecomposables() {
    let out = run(&["verify", "ar", "--type", "A3", "--output", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let results: Vec<&str> = stdout.lines().collect();
    assert_eq!(results.len(), 9, "one RESULT line per indecomposable");
    for line in &results {
        assert!(line.starts_with("RESULT ar:"));
        assert!(line.ends_with(" PASS"));
    }
}

#[test]
fn specialize_all_emits_one_certificate_per_variable() {
    let out = run(&["specialize", "--type", "A3", "--vertex", "3", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let results = stdout.lines().filter(|l| l.starts_with("RESULT ")).count();
    assert_eq!(results, 9, "one certificate per cluster variable");
}

#[test]
fn specialize_at_an_inner_vertex_is_unsupported() {
    let out = run(&["specialize", "--type", "A3", "--vertex", "1", "--all"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_quiver_file_exits_three() {
    let path = write_temp("bad-quiver.txt", "not a number\n");
    let out = run(&["enumerate", "--quiver", &path]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_file_exits_three() {
    let out = run(&["enumerate", "--quiver", "/nonexistent/q.txt"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn failed_frieze_check_exits_one() {
    let path = write_temp("bad-frieze.txt", "2\n1 2 1\n2 2\n");
    let out = run(&["frieze", "check", "--file", &path]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("RESULT frieze-check FAIL"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["enumerate", "--type", "A3"],
        vec!["verify", "palu", "--type", "A2", "--output", "machine"],
        vec!["frieze", "enumerate", "--type", "A3"],
        vec!["specialize", "--type", "A2", "--vertex", "2", "--all"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn cc_matches_across_backends() {
    // The simple at the first vertex: interval [0,0] as a module, the arc
    // (2,4) in the polygon model.
    let arc = write_temp("arc-obj.txt", "polygon 6; arcs (2,4)\n");
    let module = write_temp("mod-obj.txt", "1 0 0\nshift 2\n");
    let arc_with_shift = write_temp("arc-shift-obj.txt", "polygon 6; arcs (2,4) (1,4)\n");
    let a = run(&["cc", "--type", "A3", "--object", &arc, "--output", "machine"]);
    let b = run(&["cc", "--type", "A3", "--backend", "module", "--object", &module, "--output", "machine"]);
    let c = run(&["cc", "--type", "A3", "--object", &arc_with_shift, "--output", "machine"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    // (1,4) is the T-summand matching "shift 2".
    assert_eq!(b.stdout, c.stdout);
    assert!(!a.stdout.is_empty());
    assert!(Path::new(&arc).exists());
}

#[test]
fn mutate_round_trips_through_files() {
    let out1 = run(&["mutate", "--type", "A3", "--vertex", "2"]);
    assert_eq!(out1.status.code(), Some(0));
    let path = write_temp("mutated.txt", &String::from_utf8(out1.stdout).unwrap());
    let out2 = run(&["mutate", "--quiver", &path, "--vertex", "2"]);
    assert_eq!(out2.status.code(), Some(0));
    let text = String::from_utf8(out2.stdout).unwrap();
    // Mutating twice at the same vertex restores the original quiver.
    assert_eq!(text, "3\n1 2 1\n2 3 1\n");
}
