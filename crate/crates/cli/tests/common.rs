use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// `(golden file, args, expected exit status)`; `{in}` expands to the inputs directory.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("stability_r_a.json", &["stability", "--input", "{in}/r_a.json"], 0),
    ("stability_r_b.json", &["stability", "--input", "{in}/r_b.json"], 0),
    ("stability_r_c.json", &["stability", "--input", "{in}/r_c.json"], 0),
    ("stability_rot.json", &["stability", "--input", "{in}/rot.json"], 0),
    ("moduli_r_a.json", &["moduli", "--input", "{in}/r_a.json"], 0),
    ("moduli_r_b.json", &["moduli", "--input", "{in}/r_b.json"], 0),
    ("moduli_r_c.json", &["moduli", "--input", "{in}/r_c.json"], 1),
    ("moduli_rot.json", &["moduli", "--input", "{in}/rot.json"], 0),
    ("moduli_malformed.json", &["moduli", "--input", "{in}/malformed.json"], 2),
    ("sequiv_r_a.json", &["sequiv", "--input", "{in}/r_a.json"], 1),
    ("sequiv_r_b.json", &["sequiv", "--input", "{in}/r_b.json"], 0),
    ("sequiv_r_c.json", &["sequiv", "--input", "{in}/r_c.json"], 1),
    ("sequiv_rot.json", &["sequiv", "--input", "{in}/rot.json"], 0),
    ("classify_r_a.json", &["classify", "--input", "{in}/r_a.json"], 0),
    ("classify_r_b.json", &["classify", "--input", "{in}/r_b.json"], 0),
    ("classify_r_c.json", &["classify", "--input", "{in}/r_c.json"], 1),
    ("classify_rot.json", &["classify", "--input", "{in}/rot.json"], 0),
    ("chern_instanton.json", &["chern", "--input", "{in}/instanton.json"], 0),
    ("chern_qv.json", &["chern", "--input", "{in}/qv.json"], 0),
    ("hilbert_instanton.json", &["hilbert", "--input", "{in}/instanton.json"], 0),
    ("pairing_ee.json", &["pairing", "--input", "{in}/pairing_ee.json"], 0),
    ("pairing_u_qv.json", &["pairing", "--input", "{in}/pairing_u_qv.json"], 0),
    ("sample_seed1.json", &["sample", "--seed", "1", "--count", "10000", "--bound", "10"], 0),
    ("verify_paper.json", &["verify-paper", "--pretty"], 0),
];

pub fn run_binary(args: &[&str]) -> (i32, Vec<u8>) {
    let inputs = golden_dir().join("inputs");
    let args: Vec<String> =
        args.iter().map(|a| a.replace("{in}", inputs.to_str().expect("utf-8 path"))).collect();
    let out = Command::new(env!("CARGO_BIN_EXE_quivmod"))
        .args(&args)
        .output()
        .expect("spawn quivmod");
    (out.status.code().unwrap_or(-1), out.stdout)
}

/// Runs every golden case twice; returns one message per mismatch.
pub fn golden_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (file, args, code) in CASES {
        let expected = std::fs::read(golden_dir().join(file)).expect("golden file");
        let first = run_binary(args);
        let second = run_binary(args);
        if first != second {
            bad.push(format!("{file}: output differs between runs"));
        }
        if first.0 != *code {
            bad.push(format!("{file}: exit {} (expected {code})", first.0));
        }
        if first.1 != expected {
            bad.push(format!("{file}: stdout differs from golden"));
        }
        if serde_json::from_slice::<serde_json::Value>(&first.1).is_err() {
            bad.push(format!("{file}: stdout is not JSON"));
        }
    }
    bad
}
