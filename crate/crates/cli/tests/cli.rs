use std::process::Command;

use implicit_series::{BiSeries, Field, PrimeField, Rationals};
use implicit_series_cli::expr::{format_polynomial, parse_expression};
use implicit_series_cli::run;
use proptest::prelude::*;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("implicit-series").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = invoke(args);
    assert_eq!(r.code, 0, "{args:?} failed: {}", r.stderr);
    assert!(r.stderr.is_empty());
    r.stdout
}

fn fails_with(args: &[&str], code: i32) -> String {
    let r = invoke(args);
    assert_eq!(r.code, code, "{args:?}: stdout {:?}, stderr {:?}", r.stdout, r.stderr);
    assert!(r.stdout.is_empty());
    r.stderr
}

#[test]
fn catalan_plain() {
    let out = ok(&["solve", "--field", "q", "--poly", "X + Y^2", "--order", "6", "--method", "theorem"]);
    assert_eq!(out, "0: 0\n1: 1\n2: 1\n3: 2\n4: 5\n5: 14\n6: 42\n");
}

#[test]
fn every_method_gives_the_catalan_numbers() {
    for method in ["theorem", "char0", "fixpoint", "furstenberg"] {
        let out = ok(&["solve", "--field", "q", "--poly", "X + Y^2", "--order", "6", "--method", method]);
        assert_eq!(out, "0: 0\n1: 1\n2: 1\n3: 2\n4: 5\n5: 14\n6: 42\n", "{method}");
    }
}

#[test]
fn frobenius_solution_over_gf2() {
    let out = ok(&["solve", "--field", "fp:2", "--poly", "X + Y^2", "--order", "8", "--method", "fixpoint"]);
    assert_eq!(out, "0: 0\n1: 1\n2: 1\n3: 0\n4: 1\n5: 0\n6: 0\n7: 0\n8: 1\n");
}

#[test]
fn lagrange_char0() {
    let out = ok(&["lagrange", "--field", "q", "--phi", "(1+Y)^2", "--order", "3", "--variant", "char0"]);
    assert_eq!(out.lines().last(), Some("3: 5"));
}

#[test]
fn json_key_order_is_fixed() {
    let out = ok(&["solve", "--field", "q", "--poly", "X + Y^2", "--order", "4", "--output", "json"]);
    assert_eq!(
        out,
        "{\"method\":\"theorem\",\"field\":\"q\",\"order\":4,\"coeffs\":[\"0\",\"1\",\"1\",\"2\",\"5\"],\"residual_zero\":true}\n"
    );
}

#[test]
fn rationals_render_in_lowest_terms() {
    // f = X/2 + f^2/2 has coefficients 1/2, 1/8, 1/16, 5/128.
    let out = ok(&["solve", "--field", "q", "--poly", "1/2*X + 1/2*Y^2", "--order", "4"]);
    assert_eq!(out, "0: 0\n1: 1/2\n2: 1/8\n3: 1/16\n4: 5/128\n");
    let out = ok(&["solve", "--field", "q", "--poly", "-X + Y^2", "--order", "2"]);
    assert_eq!(out, "0: 0\n1: -1\n2: 1\n");
}

#[test]
fn residues_are_canonical() {
    let out = ok(&["solve", "--field", "fp:7", "--poly", "-X + Y^2", "--order", "2"]);
    assert_eq!(out, "0: 0\n1: 6\n2: 1\n");
}

#[test]
fn factor_prints_root_and_cofactor() {
    let out = ok(&["factor", "--field", "q", "--poly", "Y - X - Y^2", "--order", "3"]);
    assert_eq!(out, "0: 0\n1: 1\n2: 1\n3: 2\nR: 1 - Y - X - X^2 - 2*X^3\n");
}

#[test]
fn hasse_derivative() {
    assert_eq!(ok(&["hasse", "--field", "q", "--poly", "(X+Y)^3", "--m", "2", "--box", "3x3"]), "P^[2]: 3*Y + 3*X\n");
    // binom(3,2) = 3 vanishes mod 3.
    assert_eq!(ok(&["hasse", "--field", "fp:3", "--poly", "Y^3 + X*Y^2", "--m", "2", "--box", "3x3"]), "P^[2]: X\n");
}

#[test]
fn diagonal_has_no_residual() {
    let out = ok(&["diag", "--field", "q", "--poly", "(1+X*Y)^2 + X", "--order", "3", "--output", "json"]);
    assert_eq!(out, "{\"method\":\"diag\",\"field\":\"q\",\"order\":3,\"coeffs\":[\"1\",\"2\",\"1\",\"0\"],\"residual_zero\":null}\n");
}

#[test]
fn verify_reports_agreement() {
    let out = ok(&["verify", "--field", "fp:3", "--poly", "X + Y^2", "--order", "4"]);
    assert!(out.contains("taylor_residual_zero: true"));
    assert!(out.ends_with("agree: true\n"));
    assert!(!out.contains("char0"));
}

#[test]
fn validation_errors_exit_one() {
    fails_with(&["solve", "--field", "q", "--poly", "Y", "--order", "4"], 1);
    fails_with(&["solve", "--field", "q", "--poly", "1 + Y^2", "--order", "4"], 1);
    fails_with(&["solve", "--field", "fp:4", "--poly", "X + Y^2", "--order", "4"], 1);
    fails_with(&["solve", "--field", "fp:2", "--poly", "1/2*X + Y^2", "--order", "3"], 1);
    fails_with(&["solve", "--field", "fp:5", "--poly", "X + Y^2", "--order", "4", "--method", "char0"], 1);
    fails_with(&["lagrange", "--field", "q", "--phi", "X + Y", "--order", "3"], 1);
}

#[test]
fn parse_errors_exit_two() {
    let err = fails_with(&["solve", "--field", "q", "--poly", "X + * Y", "--order", "4"], 2);
    assert!(err.contains("byte 4"), "{err}");
    fails_with(&["solve", "--field", "q", "--poly", "X^-1 + Y^2", "--order", "4"], 2);
    fails_with(&["solve", "--field", "q", "--poly", "(X + Y^2", "--order", "4"], 2);
    fails_with(&["solve", "--field", "q", "--poly", "X + Z", "--order", "4"], 2);
    fails_with(&["solve", "--field", "q", "--poly", "X + Y^2", "--order", "four"], 2);
}

#[test]
fn insufficient_truncation_exits_one() {
    let err = fails_with(
        &["solve", "--field", "q", "--poly", "X + Y^2", "--order", "6", "--series-box", "6x6", "--method", "theorem"],
        1,
    );
    assert!(err.contains("insufficient truncation"), "{err}");
    // Fixed-point iteration only needs the square box.
    let out = ok(&["solve", "--field", "q", "--poly", "X + Y^2", "--order", "6", "--series-box", "6x6", "--method", "fixpoint"]);
    assert!(out.ends_with("6: 42\n"));
}

#[test]
fn binary_output_is_bit_identical_across_runs() {
    let args = ["solve", "--field", "q", "--poly", "X + Y^2", "--order", "12", "--output", "json"];
    let once = || Command::new(env!("CARGO_BIN_EXE_implicit-series")).args(args).output().unwrap();
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

fn round_trips<F: Field>(k: &F, coeffs: &[i64], nx: usize, ny: usize) {
    let p = BiSeries::from_fn(k.clone(), nx, ny, |i, j| k.from_i64(coeffs[i * (ny + 1) + j]));
    let text = format_polynomial(&p);
    let expr = parse_expression(&text, k.descriptor()).unwrap_or_else(|e| panic!("{text:?}: {e}"));
    assert_eq!(expr.lower(k, nx, ny).unwrap(), p, "{text}");
}

proptest! {
    #[test]
    fn printed_polynomials_parse_back(
        (nx, ny, coeffs) in (0usize..4, 0usize..4).prop_flat_map(|(nx, ny)| {
            (Just(nx), Just(ny), prop::collection::vec(-5i64..=5, (nx + 1) * (ny + 1)))
        }),
    ) {
        round_trips(&Rationals, &coeffs, nx, ny);
        round_trips(&PrimeField::new(7).unwrap(), &coeffs, nx, ny);
    }
}
