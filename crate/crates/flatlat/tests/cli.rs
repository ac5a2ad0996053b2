//! End-to-end tests of the `flatlat` binary: output shapes and the exit-code
//! contract (0 success/true, 1 false verdict, 2 bad input, 3 size guard).

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn flatlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatlat"))
        .args(args)
        .output()
        .expect("binary must spawn")
}

fn flatlat_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatlat"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary must spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout must be UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr must be UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal exits")
}

fn slf_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().expect("tempfile");
    f.write_all(text.as_bytes()).expect("write tempfile");
    f
}

#[test]
fn check_reports_summary_and_labels() {
    let out = flatlat(&["check", "M3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "ok: 5 elements, 6 cover pairs\nlabels: 0 p q r 1\n");
}

#[test]
fn check_reads_slf_files() {
    let f = slf_file("# a diamond\nelements 0 p q r 1\nle 0 p\nle 0 q\nle 0 r\nle p 1\nle q 1\nle r 1\n");
    let out = flatlat(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("ok: 5 elements, 6 cover pairs\n"));
}

#[test]
fn distributive_verdicts_and_witness() {
    let out = flatlat(&["distributive", "Pow(2)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "distributive: true\n");

    let out = flatlat(&["distributive", "M3"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout(&out),
        "distributive: false\nwitness: p ≤ q ∨ r has no refinement\n"
    );
}

#[test]
fn flat_with_witness_prints_the_collapse() {
    let out = flatlat(&["flat", "M3", "--witness"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout(&out),
        "flat: false\n\
         distributive: false\n\
         i ⊗ id injective: false\n\
         i′ ⊗ id injective: true\n\
         collapse (diamond route):\n\
         \x20 u = p⊗p ∨ q⊗q ∨ r⊗r\n\
         \x20 v = 1⊗1\n\
         \x20 image = {0,1,2}⊗1\n"
    );

    let out = flatlat(&["flat", "N5", "--witness"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout(&out),
        "flat: false\n\
         distributive: false\n\
         i ⊗ id injective: true\n\
         i′ ⊗ id injective: false\n\
         collapse (pentagon route):\n\
         \x20 u = a⊗c ∨ b⊗b ∨ c⊗a\n\
         \x20 v = a⊗a ∨ b⊗b\n\
         \x20 image = {2}⊗1 ∨ {0,2}⊗a ∨ {1,2}⊗b\n"
    );

    let out = flatlat(&["flat", "Chain(4)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "flat: true\ndistributive: true\ni ⊗ id injective: true\ni′ ⊗ id injective: true\n"
    );
}

#[test]
fn tensor_sizes() {
    for (a, b, n) in [
        ("M3", "M3", 50),
        ("N5", "N5", 43),
        ("M3", "N5", 41),
        ("Pow(2)", "M3", 25),
        ("Pow(3)", "M3", 125),
        ("Chain(2)", "Chain(2)", 2),
    ] {
        let out = flatlat(&["tensor", a, b]);
        assert_eq!(code(&out), 0, "tensor {a} {b}");
        assert_eq!(stdout(&out), format!("|A ⊗ B| = {n}\n"), "tensor {a} {b}");
    }
}

#[test]
fn tensor_table_lists_elements() {
    let out = flatlat(&["tensor", "Chain(2)", "Chain(2)", "--table"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "|A ⊗ B| = 2\nelements:\n  0: ∇\n  1: 1⊗1\njoin table:\n  0 1\n  1 1\n"
    );
}

#[test]
fn tensor_dot_emits_a_digraph() {
    let out = flatlat(&["tensor", "Chain(2)", "Chain(3)", "--dot"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("digraph {\n  rankdir=BT;\n"));
    assert!(text.contains("\"∇\" -> \"1⊗1\";\n"));
}

#[test]
fn ideals_listing() {
    let out = flatlat(&["ideals", "N5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "ideals: 5\n\
         \x20 0: {0}\n\
         \x20 1: {0,b}\n\
         \x20 2: {0,c}\n\
         \x20 3: {0,a,c}\n\
         \x20 4: {0,a,b,c,1}\n\
         principal: 0↦0 a↦3 b↦1 c↦2 1↦4\n"
    );
}

#[test]
fn dot_matches_golden_bytes() {
    let out = flatlat(&["dot", "M3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), include_str!("golden/m3.dot"));
    let out = flatlat(&["dot", "Chain(4)"]);
    assert_eq!(stdout(&out), include_str!("golden/chain4.dot"));
}

#[test]
fn iso_verdicts() {
    let f = slf_file("elements bot mid top\nle bot mid\nle mid top\n");
    let out = flatlat(&["iso", f.path().to_str().unwrap(), "Chain(3)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "isomorphic: true\n");

    let out = flatlat(&["iso", "M3", "N5"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "isomorphic: false\n");
}

#[test]
fn verify_table_and_machine_formats() {
    let out = flatlat(&["verify", "--max-size", "5", "--jobs", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("theorem verification up to size 5 (10 structures, jobs=2)\n"));
    assert!(text.contains("\n  5.3   5     no            inj   coll   ok        ok      ok  not    "));
    assert!(text.contains("\n  5.4   5     no            coll  inj    ok        ok      ok  not    "));
    assert!(text.contains("all consistent: flat ⇔ distributive held for all 10 structures"));

    let out = flatlat(&["verify", "--max-size", "4", "--machine"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("report max_size=4 jobs=1 structures=5 failures=0"));
    assert_eq!(text.lines().count(), 6);
    for line in text.lines().skip(1) {
        assert!(line.starts_with("structure id="));
        assert!(line.contains(" distributive=true "));
        assert!(line.contains(" brute_force=true "));
    }
}

#[test]
fn census_counts() {
    let out = flatlat(&["census", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("lattices with 5 elements: 5\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn input_errors_exit_2() {
    // missing file
    let out = flatlat(&["check", "/no/such/file.slf"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).starts_with("error: cannot read `/no/such/file.slf`"));

    // unknown label in a relation
    let f = slf_file("elements a b\nle a c\n");
    let out = flatlat(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2: unknown label `c`"));

    // no elements line
    let f = slf_file("le a b\n");
    let out = flatlat(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    // two elements with no join
    let f = slf_file("elements 0 a b\nle 0 a\nle 0 b\n");
    let out = flatlat(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no join"));

    // unknown builtin falls through to (missing) file
    let out = flatlat(&["check", "M4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn size_guard_exits_3() {
    let out = flatlat(&["check", "Pow(9)"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("size 512 exceeds the size guard 64"));

    let out = flatlat(&["tensor", "Pow(3)", "Pow(4)"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("size 128 exceeds the size guard 64"));
}

#[test]
fn size_guard_env_override() {
    // tighten: a 25-cell grid trips a guard of 20
    let out = flatlat_env(&["tensor", "M3", "N5"], "FLATLAT_SIZE_GUARD", "20");
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("size 25 exceeds the size guard 20"));

    // loosen: the 65-cell M3 × Chain(13) grid fits under 100
    let out = flatlat(&["tensor", "M3", "Chain(13)"]);
    assert_eq!(code(&out), 3);
    let out = flatlat_env(&["tensor", "M3", "Chain(13)"], "FLATLAT_SIZE_GUARD", "100");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "|A ⊗ B| = 247\n");
}
