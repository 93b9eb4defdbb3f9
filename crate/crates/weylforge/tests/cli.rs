//! End-to-end tests of the command-line interface: subcommand behavior,
//! exit-status conventions, budget overrides through the environment,
//! and byte-identical output across repeated invocations.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weylforge"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("weylforge-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const SHIFT: &str = "ring weyl n=1 char=0\nx1 -> x1\nd1 -> x1^2 + d1\n";
const TRIANGULAR: &str = "ring poly n=2 char=0\nx1 -> x1\nx2 -> x1^2 + x2\n";
const SQUARING: &str = "ring poly n=2 char=0\nx1 -> x1^2\nx2 -> x2\n";

#[test]
fn degree_of_expression() {
    let out = bin().args(["deg", "--expr", "x1*d1+1"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
    let out = bin()
        .args(["deg", "--expr", "x1*d1+1", "--format", "records"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "op=deg value=2\n");
}

#[test]
fn multiplication_normalizes() {
    let out = bin()
        .args(["mul", "--lhs", "d1", "--rhs", "x1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1*d1 + 1\n");
}

#[test]
fn inversion_with_audit() {
    let file = write_temp("tri.endo", TRIANGULAR);
    let out = bin()
        .args(["invert", "--file"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x2 -> -x1^2 + x2"));
    assert!(text.contains("deg(inverse) = 2 <= 2"));
}

#[test]
fn negative_verdicts_exit_zero() {
    let file = write_temp("sq.endo", SQUARING);
    let out = bin()
        .args(["invert", "--file"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(out.status.success(), "negative verdict still computes");
    assert_eq!(stdout(&out), "not an automorphism\n");
    // the shear is reported not integral, exit 0
    let shear = write_temp(
        "shear.endo",
        "ring poly n=2 char=0\nx1 -> x1\nx2 -> x1*x2\n",
    );
    let out = bin()
        .args(["integral", "--file"])
        .arg(&shear)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("not integral"));
}

#[test]
fn parse_errors_exit_one() {
    let out = bin().args(["deg", "--expr", "x1 + @"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let bad = write_temp("bad.endo", "ring weyl n=1 char=0\nx1 -> x1^2\nd1 -> d1\n");
    let out = bin()
        .args(["probe", "--file"])
        .arg(&bad)
        .args(["--primes", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn probe_downgrades_budget_to_inconclusive() {
    // budgets blown inside a probe make verdicts inconclusive; the probe
    // itself still computes, so the exit status is 0
    let file = write_temp("shift-b.endo", SHIFT);
    let out = bin()
        .env("WEYLFORGE_PAIR_BUDGET", "0")
        .args(["probe", "--file"])
        .arg(&file)
        .args(["--primes", "5", "--format", "records"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("finite=inconclusive"));
    assert!(text.contains("invertible=inconclusive"));
}

#[test]
fn wrong_ring_kind_is_a_usage_error() {
    let out = bin()
        .args([
            "center-test",
            "--expr",
            "x1^2",
            "--ring",
            "center n=1 char=2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args([
            "minpoly",
            "--ring",
            "weyl n=1 char=0",
            "--f",
            "x1",
            "--gen",
            "x1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_two() {
    let file = write_temp("tri2.endo", TRIANGULAR);
    let out = bin()
        .env("WEYLFORGE_PAIR_BUDGET", "0")
        .args(["invert", "--file"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .env("WEYLFORGE_UNKNOWN_BUDGET", "1")
        .args(["gen-solve", "--cutoff", "2", "--file"])
        .arg(write_temp("shift.endo", SHIFT))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn probe_runs_are_byte_identical() {
    let file = write_temp("shift2.endo", SHIFT);
    let run = || {
        bin()
            .args(["probe", "--file"])
            .arg(&file)
            .args(["--primes", "5,7", "--cutoff", "2", "--format", "records"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("prime=5 status=ok relation=yes degree=2 etale=yes window=binding finite=yes invertible=yes"));
    assert!(text.contains("prime=7"));
}

#[test]
fn restrict_center_feeds_other_commands() {
    let phi2 = write_temp(
        "as.endo",
        "ring weyl n=1 char=2\nx1 -> x1^2 + x1\nd1 -> d1\n",
    );
    let out = bin()
        .args(["restrict-center", "--file"])
        .arg(&phi2)
        .output()
        .unwrap();
    assert!(out.status.success());
    let center_text = stdout(&out);
    assert_eq!(
        center_text,
        "ring center n=1 char=2\nX1 -> X1^2 + X1\nY1 -> Y1\n"
    );
    let center = write_temp("as-center.endo", &center_text);
    let out = bin()
        .args(["etale", "--file"])
        .arg(&center)
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("etale: yes"));
    let out = bin()
        .args(["integral", "--file"])
        .arg(&center)
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.starts_with("integral: yes"));
    assert!(text.contains("t^2 + t + t1"));
    let out = bin()
        .args(["invert", "--file"])
        .arg(&center)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "not an automorphism\n");
}

#[test]
fn generation_pipeline_through_files() {
    let shift = write_temp("shift3.endo", SHIFT);
    let out = bin()
        .args(["gen-solve", "--cutoff", "2", "--file"])
        .arg(&shift)
        .output()
        .unwrap();
    assert!(out.status.success());
    let cert_text = stdout(&out);
    assert!(cert_text.starts_with("generation side=left n=1 m=1 cutoff=2 char=0"));
    let cert = write_temp("shift.cert", &cert_text);
    let out = bin()
        .args(["gen-verify", "--file"])
        .arg(&shift)
        .arg("--cert")
        .arg(&cert)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "verified: yes\n");
    // below the needed cutoff the verdict is an honest miss
    let out = bin()
        .args(["gen-solve", "--cutoff", "1", "--file"])
        .arg(&shift)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "none at cutoff 1\n");
}

#[test]
fn compose_and_apply() {
    let shift = write_temp("shift4.endo", SHIFT);
    let inverse = write_temp(
        "shift-inv.endo",
        "ring weyl n=1 char=0\nx1 -> x1\nd1 -> -x1^2 + d1\n",
    );
    let out = bin()
        .args(["compose", "--file"])
        .arg(&shift)
        .arg("--file")
        .arg(&inverse)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "ring weyl n=1 char=0\nx1 -> x1\nd1 -> d1\n");
    let out = bin()
        .args(["apply", "--expr", "d1*x1", "--file"])
        .arg(&shift)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "x1^3 + x1*d1 + 1\n");
}

#[test]
fn groebner_report_format() {
    let out = bin()
        .args([
            "gb",
            "--ring",
            "poly n=3 char=0",
            "--gen",
            "x2 - x1^2",
            "--gen",
            "x3 - x1^3",
            "--order",
            "lex",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("order=lex\ninput_degree=3\nmax_degree=3\n"));
    assert!(text.contains("x2^3 - x3^2"));
    // minpoly of the symmetric-function example
    let out = bin()
        .args([
            "minpoly",
            "--ring",
            "poly n=2 char=0",
            "--f",
            "x1",
            "--gen",
            "x1 + x2",
            "--gen",
            "x1*x2",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "t^2 - t*t1 + t2\n");
}

#[test]
fn etale_window_report() {
    let shift = write_temp("shift5.endo", SHIFT);
    let out = bin()
        .args(["etale-window", "--file"])
        .arg(&shift)
        .args(["--primes", "5,7,11", "--format", "records"])
        .output()
        .unwrap();
    let text = stdout(&out);
    for p in [5, 7, 11] {
        assert!(text.contains(&format!("prime={p} status=etale degree=2 window=binding")));
    }
    // a prime dividing a denominator is skipped with notice
    let half = write_temp(
        "half.endo",
        "ring weyl n=1 char=0\nx1 -> x1\nd1 -> 1/2*x1^2 + d1\n",
    );
    let out = bin()
        .args(["etale-window", "--file"])
        .arg(&half)
        .args(["--primes", "2,7", "--format", "records"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("prime=2 status=skipped"));
    assert!(text.contains("prime=7 status=etale"));
}

#[test]
fn center_ops() {
    let out = bin()
        .args(["center-test", "--expr", "x1^3", "--ring", "weyl n=1 char=3"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "central: yes\n");
    let out = bin()
        .args([
            "center-test",
            "--expr",
            "x1*d1",
            "--ring",
            "weyl n=1 char=3",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "central: no\n");
    let out = bin()
        .args([
            "center-extract",
            "--expr",
            "x1^3*d1^3 + 2*x1^3",
            "--ring",
            "weyl n=1 char=3",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "X1*Y1 + 2*X1\n");
    let id2 = write_temp("id2.endo", "ring weyl n=1 char=2\nx1 -> x1\nd1 -> d1\n");
    let out = bin()
        .args(["expand-qp", "--expr", "x1^3", "--file"])
        .arg(&id2)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "c 1 | 0 = X1\n");
}
