//! End-to-end tests of the `hyperoct` binary: outputs, exit codes, and
//! machine round-trippability of everything it prints.

use hyperoct::{rank, BigUint, HyperNumeral, InversionCode, SignedPermutation};
use std::process::Command;

fn hyperoct(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_hyperoct"))
        .args(args)
        .output()
        .expect("spawn hyperoct");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn convert_to_hyper() {
    let (code, stdout, _) = hyperoct(&["convert", "--to-hyper", "2711"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "7:0:2:3:1\n");
}

#[test]
fn convert_to_dec_both_styles() {
    let (code, stdout, _) = hyperoct(&["convert", "--to-dec", "7:0:2:3:1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "2711\n");
    let (code, stdout, _) = hyperoct(&["convert", "--to-dec", "1501"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "89\n");
}

#[test]
fn convert_compact_style() {
    let (code, stdout, _) = hyperoct(&["convert", "--to-hyper", "89", "--compact"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1501\n");
}

#[test]
fn convert_compact_rejected_for_wide_digits() {
    // 38400 = 10 * B_5, so its leading digit has two characters
    let (code, stdout, stderr) = hyperoct(&["convert", "--to-hyper", "38400", "--compact"]);
    assert_eq!(code, 2);
    assert_eq!(stdout, "");
    assert!(stderr.contains("digit 10"), "stderr: {stderr}");
    let (code, stdout, _) = hyperoct(&["convert", "--to-hyper", "38400"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "10:0:0:0:0:0\n");
}

#[test]
fn code_subcommand() {
    let (code, stdout, _) = hyperoct(&["code", "1 -3 4 2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0:4:1:0\n");
}

#[test]
fn rank_subcommand() {
    let (code, stdout, _) = hyperoct(&["rank", "1 -3 4 2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "35\n");
    // commas work too
    let (code, stdout, _) = hyperoct(&["rank", "1,-3,4,2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "35\n");
}

#[test]
fn unrank_subcommand() {
    let (code, stdout, _) = hyperoct(&["unrank", "35", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 -3 4 2\n");
    let (code, stdout, _) = hyperoct(&["unrank", "1", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 2 3\n");
}

#[test]
fn enumerate_matches_golden_file() {
    let (code, stdout, _) = hyperoct(&["enumerate", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/enumerate_n3.txt"));
}

#[test]
fn enumerate_single_row() {
    let (code, stdout, _) = hyperoct(&["enumerate", "--n", "3", "--from", "25", "--to", "25"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "25  -3 1 2  3:0:0\n");
}

#[test]
fn enumerate_degree_zero() {
    let (code, stdout, _) = hyperoct(&["enumerate", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1    \n");
}

#[test]
fn enumerate_streams_large_degrees() {
    // ranges keep huge groups usable; B_64 is astronomically large
    let (code, stdout, _) = hyperoct(&["enumerate", "--n", "64", "--from", "1", "--to", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    let window: SignedPermutation = lines[1].split("  ").nth(1).unwrap().parse().unwrap();
    assert_eq!(rank(&window), BigUint::from(2u32));
}

#[test]
fn outputs_parse_back() {
    let (_, stdout, _) = hyperoct(&["rank", "2 -4 1 -3"]);
    let k: BigUint = stdout.trim().parse().unwrap();
    let (_, stdout, _) = hyperoct(&["unrank", &k.to_string(), "--n", "4"]);
    let window: SignedPermutation = stdout.trim().parse().unwrap();
    assert_eq!(window.window(), &[2, -4, 1, -3]);

    let (_, stdout, _) = hyperoct(&["code", "2 -4 1 -3"]);
    let parsed: InversionCode = stdout.trim().parse().unwrap();
    assert_eq!(parsed, window.code());

    let (_, stdout, _) = hyperoct(&["convert", "--to-hyper", "123456789"]);
    let numeral: HyperNumeral = stdout.trim().parse().unwrap();
    let (_, stdout, _) = hyperoct(&["convert", "--to-dec", stdout.trim()]);
    assert_eq!(stdout.trim(), "123456789");
    assert_eq!(numeral.to_integer().to_string(), "123456789");
}

#[test]
fn selftest_passes() {
    let (code, stdout, _) = hyperoct(&["selftest", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("selftest passed"), "stdout: {stdout}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["--bogus"] as &[&str],
        &[],
        &["convert"],
        &["convert", "--to-hyper", "1", "--to-dec", "1"],
        &["convert", "--to-dec", "1", "--compact"],
        &["unrank", "1"],
        &["enumerate"],
        &["frobnicate"],
    ] {
        let (code, _, stderr) = hyperoct(args);
        assert_eq!(code, 1, "args {args:?}, stderr: {stderr}");
        assert_eq!(
            stderr.lines().count(),
            1,
            "one-line diagnostic for {args:?}"
        );
    }
}

#[test]
fn domain_errors_exit_two_and_name_the_value() {
    let cases: [(&[&str], &str); 8] = [
        (&["rank", "1 x 2"], "1 x 2"),
        (&["code", "1 0 2"], "position 2"),
        (&["code", "1 5 2"], "5"),
        (&["unrank", "49", "--n", "3"], "49"),
        (&["unrank", "abc", "--n", "3"], "abc"),
        (&["convert", "--to-dec", "7::1"], "7::1"),
        (&["convert", "--to-hyper", "12a"], "12a"),
        (&["enumerate", "--n", "3", "--from", "0"], "rank 0"),
    ];
    for (args, needle) in cases {
        let (code, stdout, stderr) = hyperoct(args);
        assert_eq!(code, 2, "args {args:?}, stderr: {stderr}");
        assert_eq!(stdout, "", "no stdout for {args:?}");
        assert_eq!(
            stderr.lines().count(),
            1,
            "one-line diagnostic for {args:?}"
        );
        assert!(stderr.contains(needle), "{args:?} stderr: {stderr}");
    }
}

#[test]
fn selftest_degree_guard() {
    let (code, _, stderr) = hyperoct(&["selftest", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("degree 7"), "stderr: {stderr}");
}

#[test]
fn help_and_version_exit_zero() {
    for args in [
        &["--help"] as &[&str],
        &["--version"],
        &["unrank", "--help"],
    ] {
        let (code, stdout, _) = hyperoct(args);
        assert_eq!(code, 0, "args {args:?}");
        assert!(!stdout.is_empty());
    }
}
