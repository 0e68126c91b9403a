//! Exit criteria for the solver and the CLI. Every check is exact; each
//! criterion prints one PASS/FAIL line with its elapsed time.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use implicit_series::{
    coeff_main_theorem, factor_out_root, furstenberg_solve, lagrange, main_theorem_terms,
    solve_series, summation_bound, taylor_residual, BiSeries, Field, ImplicitProblem,
    LagrangeVariant, Method, PrimeField, Problem, Rationals, RootProblem, UniSeries,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// `C_(n-1) = (1/n) binom(2n-2, n-1)`, evaluated with factorials in `Z`.
fn shifted_catalan(n: usize) -> BigInt {
    factorial(2 * n - 2) / (factorial(n - 1) * factorial(n - 1)) / BigInt::from(n)
}

fn small_elem<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    let num: i64 = rng.gen_range(-3..=3);
    if k.characteristic() == 0 && rng.gen_bool(0.25) {
        let den: i64 = rng.gen_range(2..=3);
        k.from_ratio(&num.into(), &den.into()).expect("nonzero denominator")
    } else if k.characteristic() != 0 {
        k.from_i64(rng.gen_range(0..k.characteristic() as i64))
    } else {
        k.from_i64(num)
    }
}

fn sparse_elem<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    if rng.gen_bool(0.5) {
        small_elem(k, rng)
    } else {
        k.zero()
    }
}

/// Polynomial with X- and Y-degree at most 4 and `a_00 = a_01 = 0`.
fn random_implicit<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> BiSeries<F> {
    BiSeries::from_fn(k.clone(), 4, 4, |i, j| match (i, j) {
        (0, 0) | (0, 1) => k.zero(),
        _ => sparse_elem(k, rng),
    })
}

/// Polynomial with X- and Y-degree at most 4, `q_00 = 0` and `q_01 != 0`.
fn random_root<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> BiSeries<F> {
    BiSeries::from_fn(k.clone(), 4, 4, |i, j| match (i, j) {
        (0, 0) => k.zero(),
        (0, 1) => loop {
            let c = small_elem(k, rng);
            if !k.is_zero(&c) {
                break c;
            }
        },
        _ => sparse_elem(k, rng),
    })
}

fn catalan_problem<F: Field>(k: &F) -> Problem<F> {
    ImplicitProblem::polynomial(BiSeries::from_terms(k.clone(), 2, 2, &[(1, 0, 1), (0, 2, 1)]))
        .expect("valid")
        .into()
}

fn criterion_1() -> Check {
    let n_max = 20;
    let expected: Vec<_> = std::iter::once(Rationals.zero())
        .chain((1..=n_max).map(|n| Rationals.from_bigint(&shifted_catalan(n))))
        .collect();
    ensure(
        expected[20] == Rationals.from_i64(1_767_263_190),
        || "closed form for C_19".into(),
    )?;
    for method in Method::ALL {
        let report = solve_series(&catalan_problem(&Rationals), n_max, method).map_err(|e| e.to_string())?;
        ensure(report.solution.coeffs() == expected.as_slice(), || {
            format!("{method} differs from the Catalan numbers")
        })?;
        ensure(report.residual_norm_zero, || format!("{method} residual"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let k = PrimeField::new(2).expect("prime");
    let n_max = 64;
    let expected: Vec<_> = (0..=n_max)
        .map(|n: usize| k.from_i64(i64::from(n.is_power_of_two())))
        .collect();
    for method in [Method::MainTheorem, Method::FixedPoint, Method::Furstenberg] {
        let report = solve_series(&catalan_problem(&k), n_max, method).map_err(|e| e.to_string())?;
        ensure(report.solution.coeffs() == expected.as_slice(), || {
            format!("{method} is not supported exactly on powers of two")
        })?;
        ensure(report.residual_norm_zero, || format!("{method} residual"))?;
    }
    Ok(())
}

const FUZZ_SEED: u64 = 3;
const FUZZ_INSTANCES: usize = 100;
const FUZZ_ORDER: usize = 12;

fn cross_method_fuzz<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> Check {
    for t in 0..FUZZ_INSTANCES {
        let prob = ImplicitProblem::polynomial(random_implicit(k, rng)).expect("valid by construction");
        let problem: Problem<F> = prob.into();
        let mut reference: Option<UniSeries<F>> = None;
        for method in Method::ALL {
            if !method.supports_characteristic(k.characteristic()) {
                continue;
            }
            let context = || format!("{}: instance {t}: {method}", k.descriptor());
            let report = solve_series(&problem, FUZZ_ORDER, method).map_err(|e| format!("{}: {e}", context()))?;
            ensure(report.residual_norm_zero, || format!("{}: residual nonzero", context()))?;
            match &reference {
                None => reference = Some(report.solution),
                Some(f) => ensure(*f == report.solution, || format!("{}: disagrees", context()))?,
            }
        }
    }
    Ok(())
}

/// Replays the fuzz instances and checks the terms past the summation bound.
fn bound_is_tight<F: Field>(k: &F, rng: &mut ChaCha8Rng) -> Check {
    for t in 0..FUZZ_INSTANCES {
        let prob = ImplicitProblem::polynomial(random_implicit(k, rng)).expect("valid by construction");
        extended_terms_vanish(&prob, FUZZ_ORDER).map_err(|e| format!("{}: instance {t}: {e}", k.descriptor()))?;
    }
    Ok(())
}

fn extended_terms_vanish<F: Field>(prob: &ImplicitProblem<F>, n_max: usize) -> Check {
    let k = prob.field();
    let terms = main_theorem_terms(prob, n_max, 2 * n_max + 3).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        for m in summation_bound(n) + 1..=2 * n + 3 {
            ensure(k.is_zero(&terms[m - 1][n]), || format!("term m={m} for n={n} is nonzero"))?;
        }
    }
    Ok(())
}

fn taylor_pairs<F: Field>(k: &F, rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for t in 0..pairs {
        let p = BiSeries::from_fn(k.clone(), 8, 8, |_, _| small_elem(k, rng));
        let f = UniSeries::from_fn(k.clone(), 8, |n| if n == 0 { k.zero() } else { small_elem(k, rng) });
        let residual = taylor_residual(&p, &f).map_err(|e| e.to_string())?;
        ensure(residual.is_zero(), || format!("{}: pair {t} has a nonzero residual", k.descriptor()))?;
    }
    Ok(())
}

fn factorizations<F: Field>(k: &F, rng: &mut ChaCha8Rng, instances: usize) -> Check {
    let n = 12;
    for t in 0..instances {
        let q = random_root(k, rng).resized(n, 4);
        let rp = RootProblem::polynomial(q).map_err(|e| e.to_string())?;
        let f = furstenberg_solve(&rp, n).map_err(|e| e.to_string())?;
        let r = factor_out_root(&rp, &f).map_err(|e| e.to_string())?;
        let linear = BiSeries::y(k.clone(), n, 4)
            .sub(&BiSeries::from_x_series(&f, 4))
            .map_err(|e| e.to_string())?;
        let product = linear.mul(&r.resized(n, 4)).map_err(|e| e.to_string())?;
        ensure(product == *rp.q(), || format!("{}: instance {t}: (Y - f) R != Q", k.descriptor()))?;
    }
    Ok(())
}

fn catalan_cofactor() -> Check {
    let n = 12;
    let q = BiSeries::from_terms(Rationals, n, 2, &[(0, 1, 1), (1, 0, -1), (0, 2, -1)]);
    let rp = RootProblem::polynomial(q).map_err(|e| e.to_string())?;
    let f = furstenberg_solve(&rp, n).map_err(|e| e.to_string())?;
    let r = factor_out_root(&rp, &f).map_err(|e| e.to_string())?;
    let one_minus_f = UniSeries::one(Rationals, n).sub(&f).map_err(|e| e.to_string())?;
    let expected = BiSeries::from_x_series(&one_minus_f, 1)
        .sub(&BiSeries::y(Rationals, n, 1))
        .map_err(|e| e.to_string())?;
    ensure(r == expected, || "R != 1 - f - Y for Q = Y - X - Y^2".into())
}

fn lagrange_consistency<F: Field>(k: &F, rng: &mut ChaCha8Rng, instances: usize) -> Check {
    for t in 0..instances {
        let degree = rng.gen_range(0..=5);
        let phi = UniSeries::from_fn(k.clone(), degree, |j| {
            if j == 0 {
                loop {
                    let c = small_elem(k, rng);
                    if !k.is_zero(&c) {
                        break c;
                    }
                }
            } else {
                small_elem(k, rng)
            }
        });
        // X * phi(Y)
        let p = BiSeries::from_fn(k.clone(), 1, degree, |i, j| {
            if i == 1 { phi.coeffs()[j].clone() } else { k.zero() }
        });
        let prob = ImplicitProblem::polynomial(p).map_err(|e| e.to_string())?;
        for n in 1..=10 {
            let phi_n = phi.padded(degree.max(n - 1));
            let general = lagrange(&phi_n, n, LagrangeVariant::GeneralField).map_err(|e| e.to_string())?;
            let theorem = coeff_main_theorem(&prob, n).map_err(|e| e.to_string())?;
            ensure(general == theorem, || format!("{}: instance {t}, n={n}: general != theorem", k.descriptor()))?;
            if k.characteristic() == 0 {
                let char0 = lagrange(&phi_n, n, LagrangeVariant::Char0).map_err(|e| e.to_string())?;
                ensure(char0 == general, || format!("instance {t}, n={n}: char0 != general"))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    for j in 0..=12usize {
        for k in 0..=j {
            let sum = (k..=j).fold(BigInt::from(0), |acc, m| {
                let term = factorial(j) / (factorial(j - m) * factorial(m - k) * factorial(k));
                if (m - k) % 2 == 0 { acc + term } else { acc - term }
            });
            ensure(sum == BigInt::from(i64::from(j == k)), || format!("j={j}, k={k} gives {sum}"))?;
        }
    }
    Ok(())
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_implicit-series"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn criterion_9() -> Check {
    let invocations: [(&[&str], &str); 3] = [
        (
            &["solve", "--field", "q", "--poly", "X + Y^2", "--order", "6", "--method", "theorem"],
            "0: 0\n1: 1\n2: 1\n3: 2\n4: 5\n5: 14\n6: 42\n",
        ),
        (
            &["solve", "--field", "fp:2", "--poly", "X + Y^2", "--order", "8", "--method", "fixpoint"],
            "0: 0\n1: 1\n2: 1\n3: 0\n4: 1\n5: 0\n6: 0\n7: 0\n8: 1\n",
        ),
        (
            &["lagrange", "--field", "q", "--phi", "(1+Y)^2", "--order", "3", "--variant", "char0"],
            "0: 0\n1: 1\n2: 2\n3: 5\n",
        ),
    ];
    for (args, expected) in invocations {
        let first = cli(args);
        let second = cli(args);
        ensure(first.status.code() == Some(0), || format!("{args:?} failed"))?;
        ensure(first.stdout == second.stdout && first.stderr == second.stderr, || {
            format!("{args:?} is not deterministic")
        })?;
        ensure(first.stdout == expected.as_bytes(), || {
            format!("{args:?} printed {:?}", String::from_utf8_lossy(&first.stdout))
        })?;
        let json: Vec<&str> = args.iter().copied().chain(["--output", "json"]).collect();
        ensure(cli(&json).stdout == cli(&json).stdout, || format!("{json:?} is not deterministic"))?;
    }
    let linear = cli(&["solve", "--field", "q", "--poly", "Y", "--order", "4"]);
    ensure(linear.status.code() == Some(1), || format!("P = Y exited with {:?}", linear.status.code()))?;
    let malformed = cli(&["solve", "--field", "q", "--poly", "X + * Y", "--order", "4"]);
    ensure(malformed.status.code() == Some(2), || {
        format!("malformed expression exited with {:?}", malformed.status.code())
    })?;
    ensure(malformed.stdout.is_empty() && !malformed.stderr.is_empty(), || {
        "diagnostics must go to stderr".into()
    })
}

struct Outcome {
    id: usize,
    name: &'static str,
    result: Check,
    elapsed: Duration,
    budget: Duration,
}

fn record(outcomes: &mut Vec<Outcome>, id: usize, name: &'static str, budget_secs: u64, run: impl FnOnce() -> Check) {
    let start = Instant::now();
    let result = run();
    outcomes.push(Outcome { id, name, result, elapsed: start.elapsed(), budget: Duration::from_secs(budget_secs) });
}

/// Runs `check` over Q and each prime field, all drawing from one seeded stream.
fn every_field(seed: u64, check: impl Fn(&dyn AnyField, &mut ChaCha8Rng) -> Check) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    check(&Rationals, &mut rng)?;
    for p in [2, 3, 5, 7, 101] {
        check(&PrimeField::new(p).expect("prime"), &mut rng)?;
    }
    Ok(())
}

fn main() {
    let mut outcomes = Vec::new();
    let o = &mut outcomes;
    record(o, 1, "Catalan reproduction over Q, four methods, n <= 20", 1, criterion_1);
    record(o, 2, "GF(2) solution supported on powers of two through order 64", 1, criterion_2);
    record(o, 3, "cross-method fuzz, 100 problems per field, n_max = 12", 30, || {
        every_field(FUZZ_SEED, |k, rng| k.cross_method_fuzz(rng))
    });
    record(o, 4, "Taylor identity, 50 pairs per field on box (8,8)", 5, || {
        every_field(4, |k, rng| k.taylor_pairs(rng))
    });
    record(o, 5, "factorization (Y - f) R = Q, 50 problems per field", 5, || {
        every_field(5, |k, rng| k.factorizations(rng))?;
        catalan_cofactor()
    });
    record(o, 6, "Lagrange inversion matches the extraction formula, n <= 10", 5, || {
        every_field(6, |k, rng| k.lagrange_consistency(rng))
    });
    record(o, 7, "terms past m = 2n - 1, up to 2n + 3, vanish on the fuzz instances", 30, || {
        every_field(FUZZ_SEED, |k, rng| k.bound_is_tight(rng))
    });
    // Criterion 7 shares criterion 3's budget.
    let fuzz_elapsed = o[2].elapsed;
    o[6].budget = o[6].budget.saturating_sub(fuzz_elapsed);
    record(o, 8, "multinomial collapse identity for 0 <= k <= j <= 12", 1, criterion_8);
    record(o, 9, "CLI determinism and exit codes", 1, criterion_9);

    for o in &mut outcomes {
        if o.result.is_ok() && o.elapsed >= o.budget {
            o.result = Err(format!("took {:.2?}, over budget", o.elapsed));
        }
    }
    let mut failed = 0;
    for o in &outcomes {
        let status = if o.result.is_ok() { "PASS" } else { "FAIL" };
        print!("criterion {}: {status} ({:.2?}, expected < {:.2?}) {}", o.id, o.elapsed, o.budget, o.name);
        match &o.result {
            Ok(()) => println!(),
            Err(e) => {
                failed += 1;
                println!(" -- {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} acceptance criteria failed", outcomes.len());
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", outcomes.len());
}

/// Object-safe dispatch so one closure can visit fields of different types.
trait AnyField {
    fn cross_method_fuzz(&self, rng: &mut ChaCha8Rng) -> Check;
    fn bound_is_tight(&self, rng: &mut ChaCha8Rng) -> Check;
    fn taylor_pairs(&self, rng: &mut ChaCha8Rng) -> Check;
    fn factorizations(&self, rng: &mut ChaCha8Rng) -> Check;
    fn lagrange_consistency(&self, rng: &mut ChaCha8Rng) -> Check;
}

impl<F: Field> AnyField for F {
    fn cross_method_fuzz(&self, rng: &mut ChaCha8Rng) -> Check {
        cross_method_fuzz(self, rng)
    }
    fn bound_is_tight(&self, rng: &mut ChaCha8Rng) -> Check {
        bound_is_tight(self, rng)
    }
    fn taylor_pairs(&self, rng: &mut ChaCha8Rng) -> Check {
        taylor_pairs(self, rng, 50)
    }
    fn factorizations(&self, rng: &mut ChaCha8Rng) -> Check {
        factorizations(self, rng, 50)
    }
    fn lagrange_consistency(&self, rng: &mut ChaCha8Rng) -> Check {
        lagrange_consistency(self, rng, 50)
    }
}
