//! End-to-end checks of the binary: exit codes, output determinism, and
//! the DOT emitter.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hess-arr"))
}

#[test]
fn success_exit_code_and_determinism() {
    let args = [
        "hilbert", "--family", "B", "--rank", "3", "--ideal", "all", "--format", "json",
    ];
    let first = bin().args(args).output().unwrap();
    let second = bin().args(args).output().unwrap();
    assert!(first.status.success());
    // byte-for-byte identical output for identical configuration
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"].as_array().unwrap().len(), 20);
}

#[test]
fn usage_errors_exit_2() {
    // unknown subcommand (clap)
    let out = bin().arg("no-such-command").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // invalid family
    let out = bin()
        .args(["exponents", "--family", "Z", "--rank", "2", "--roots", ""])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // invalid Hessenberg function
    let out = bin()
        .args(["exponents", "--family", "B", "--rank", "3", "--hess", "6,4,4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // missing ideal specifier
    let out = bin()
        .args(["exponents", "--family", "B", "--rank", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // non-lower root list
    let out = bin()
        .args(["exponents", "--family", "A", "--rank", "3", "--roots", "x1-x3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weyl_bound_env_override() {
    let out = bin()
        .args(["chambers", "--family", "B", "--rank", "3", "--roots", ""])
        .env("HESSARR_MAX_WEYL", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn verify_all_passes_on_small_scopes() {
    for family in ["A", "D", "G"] {
        let out = bin()
            .args(["verify-all", "--family", family, "--rank", "2", "--ideal", "all"])
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{}: {}",
            family,
            String::from_utf8_lossy(&out.stdout)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        if family == "A" {
            assert!(text.contains("verify-all: 5 ideals, all checks passed"));
        }
    }
}

#[test]
fn gkm_dot_shape() {
    let out = bin()
        .args(["gkm-dot", "--family", "A", "--rank", "2", "--ideal", "all"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // five ideals, one graph each
    assert_eq!(text.matches("graph gkm {").count(), 5);
    // edge counts |W| |I| / 2 per ideal: 0 + 3 + 3 + 6 + 9
    assert_eq!(text.matches("label=").count(), 21);
}

#[test]
fn empty_ideal_specifier_and_exponents() {
    let out = bin()
        .args(["exponents", "--family", "G", "--rank", "2", "--roots", ""])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("exponents (0,0)"), "{}", text);
}

#[test]
fn verify_all_output_is_deterministic() {
    let args = [
        "verify-all", "--family", "B", "--rank", "2", "--ideal", "all", "--format", "json",
    ];
    let first = bin().args(args).output().unwrap();
    let second = bin().args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn presentation_prints_expanded_generators() {
    let out = bin()
        .args(["presentation", "--family", "B", "--rank", "3", "--hess", "3,5,4"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x1^3 - x1^2*x2 - x1^2*x3 + x1*x2*x3"));
    assert!(text.contains("x1^2 + x2^2 + x3^2"));
}
