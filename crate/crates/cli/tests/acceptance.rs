//! Criterion 11: byte-identical outputs for repeated runs and the exit-code
//! contract. Run with `-- --nocapture` to see the verdict line.

use std::process::Command;
use std::time::Instant;

fn fuzzbl(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_fuzzbl"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

#[test]
fn criterion_11_cli_determinism_and_exit_codes() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let (roc1, roc2, hw1, hw2, m1, m2) = (
        path("roc1.csv"),
        path("roc2.csv"),
        path("hw1.csv"),
        path("hw2.csv"),
        path("m1.json"),
        path("m2.json"),
    );

    let stdout_runs: Vec<Vec<&str>> = vec![
        vec!["eval", "S & (S -> E)", "--set", "S=0.3", "--set", "E=0.6", "--logic", "product"],
        vec!["audit", "--data", "../../data/audit_sample.csv", "--protected", "b", "--measure", "eo"],
        vec!["bias", "--s", "0.4", "--e", "0.7", "--f", "0.9", "--logic", "godel"],
        vec!["hw", "--utilities", "0.5,0.7,0.6", "--delta", "0.1", "--fair"],
        vec!["roc-sim", "--steps", "3", "--n", "3000", "--seed", "7"],
    ];
    let mut identical = stdout_runs.iter().all(|args| {
        let (a, b) = (fuzzbl(args), fuzzbl(args));
        a.0 == 0 && a == b
    });
    for out in [&roc1, &roc2] {
        fuzzbl(&["roc-sim", "--steps", "4", "--n", "4000", "--seed", "7", "--out", out]);
    }
    for out in [&hw1, &hw2] {
        fuzzbl(&["hw", "--delta", "0.2", "--contour", "21", "--out", out]);
    }
    for out in [&m1, &m2] {
        fuzzbl(&["belief", "train", "--in", "../../data/beliefs_illustrative.csv", "--out", out, "--max-epochs", "2000"]);
    }
    for (a, b) in [(&roc1, &roc2), (&hw1, &hw2), (&m1, &m2)] {
        identical &= std::fs::read(a).ok().is_some_and(|x| Some(x) == std::fs::read(b).ok());
    }

    let contract = [
        (0, vec!["eval", "true"]),
        (1, vec!["bogus"]),
        (2, vec!["eval", "A &"]),
        (3, vec!["eval", "A & Missing", "--set", "A=0.2"]),
        (4, vec!["audit", "--data", "tests/fixtures/equal_rates.csv", "--protected", "nobody"]),
    ];
    let mut codes = Vec::new();
    let mut contract_ok = true;
    for (want, args) in &contract {
        let got = fuzzbl(args).0;
        codes.push(format!("{want}->{got}"));
        contract_ok &= got == *want;
    }

    let ok = identical && contract_ok;
    println!(
        "criterion 11: {} CLI determinism and exit codes ({:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    println!("    [{}] byte-identical repeated runs (stdout, sweep CSV, contour CSV, model JSON)", if identical { "ok" } else { "FAILED" });
    println!("    [{}] exit codes {}", if contract_ok { "ok" } else { "FAILED" }, codes.join(", "));
    assert!(ok);
}
