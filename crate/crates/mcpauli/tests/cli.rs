//! Black-box tests of the `mcpauli` binary: exit codes, output shapes, and
//! run-to-run determinism, exercised by spawning the real executable.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcpauli"))
        .args(args)
        .output()
        .expect("the crate's own binary must spawn")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn list_names_every_catalog_entry() {
    let out = run(&["list"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for e in mcpauli::catalog::CATALOG {
        assert!(text.contains(e.name), "`list` is missing {}", e.name);
    }
    assert_eq!(text.lines().count(), mcpauli::catalog::CATALOG.len());
}

#[test]
fn build_output_parses_back_to_the_same_circuit() {
    let out = run(&["build", "cccz-fig1b"]);
    assert!(out.status.success());
    let parsed = mcpauli::text::parse(&stdout_of(&out)).expect("build output must parse");
    let direct = mcpauli::catalog::build_named("cccz-fig1b").unwrap();
    assert_eq!(mcpauli::text::serialize(&parsed), mcpauli::text::serialize(&direct));
}

#[test]
fn build_writes_the_out_file() {
    let path = std::env::temp_dir().join(format!("mcpauli-build-{}.mcp", std::process::id()));
    let out = run(&["build", "cz", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(mcpauli::text::parse(&written).is_ok(), "--out file must parse");
}

#[test]
fn verify_prints_equivalent_and_exits_zero() {
    let out = run(&["verify", "ccz-paler-fig2a"]);
    assert!(out.status.success(), "verify exited {:?}", out.status);
    assert!(stdout_of(&out).starts_with("equivalent ("));
}

#[test]
fn verify_below_floating_point_noise_exits_one() {
    // Nothing beats a 1e-30 tolerance; the mismatch path must report and
    // exit 1, not 2 (the key is fine, the verdict is negative).
    let out = run(&["verify", "ccz-paler-fig2a", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).starts_with("not equivalent"));
}

#[test]
fn unknown_keys_are_usage_errors() {
    for args in [
        &["verify", "no-such-entry"][..],
        &["build", "no-such-entry"][..],
        &["report", "no-such-entry"][..],
        &["identities", "--samples", "0"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?} should be a usage error");
    }
    let bare = run(&[]);
    assert_eq!(bare.status.code(), Some(2), "no subcommand is a usage error");
}

#[test]
fn report_row_matches_the_library() {
    let out = run(&["report", "cccz-gidney"]);
    assert!(out.status.success());
    let expected = mcpauli::catalog::entry("cccz-gidney").unwrap().report().row();
    assert_eq!(stdout_of(&out).trim_end(), expected);
}

#[test]
fn table_cccz_matches_the_golden_block() {
    let out = run(&["table", "cccz"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), include_str!("golden/table_cccz.txt"));
}

#[test]
fn identities_verb_passes_quickly_and_deterministically() {
    let a = run(&["identities", "--samples", "2"]);
    assert!(a.status.success(), "identities exited {:?}", a.status);
    let b = run(&["identities", "--samples", "2"]);
    assert_eq!(stdout_of(&a), stdout_of(&b), "same seed, same transcript");
    assert!(stdout_of(&a).contains("all 13 identities hold"));
}

#[test]
fn scan_rejects_n_max_below_three() {
    let out = run(&["tdepth-scan", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cnz_table_agrees_with_the_scan() {
    // The cnz table shows the exhaustive-strategy sweep; every scan row with
    // strategy `exhaustive` must reappear in the table with the same
    // T-count, CNOT range, and T-depth.
    let table = run(&["table", "cnz", "--n-max", "4"]);
    assert!(table.status.success());
    let table_text = stdout_of(&table);
    assert_eq!(
        table_text.lines().next(),
        Some("n name t_count cnot_min cnot_max t_depth ancillas feedback")
    );

    let scan = run(&["tdepth-scan", "--n-max", "4"]);
    assert!(scan.status.success());
    let scan_text = stdout_of(&scan);
    let mut scan_lines = scan_text.lines();
    assert_eq!(
        scan_lines.next(),
        Some("n,base,method,strategy,t_count,cnot_min,cnot_max,t_depth"),
        "scan header is part of the CLI contract"
    );
    let mut cross_checked = 0;
    for row in scan_lines {
        let f: Vec<&str> = row.split(',').collect();
        if f[3] != "exhaustive" {
            continue;
        }
        let prefix = format!("{} {}+{} ", f[0], f[1], f[2]);
        let line = table_text
            .lines()
            .find(|l| l.starts_with(&prefix))
            .unwrap_or_else(|| panic!("table lacks a row for scan entry {row}"));
        let cols: Vec<&str> = line.split(' ').collect();
        assert_eq!(
            (cols[2], cols[3], cols[4], cols[5]),
            (f[4], f[5], f[6], f[7]),
            "table and scan disagree on {prefix}"
        );
        cross_checked += 1;
    }
    assert_eq!(cross_checked, 16, "two n values × eight chain families");
}
