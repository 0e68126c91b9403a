//! Command line front end: parses polynomial expressions over a chosen
//! field and runs the implicit-series solvers on them.
//!
//! Exit codes: 0 on success, 1 for domain or validation errors, 2 for
//! malformed expressions or arguments.

pub mod expr;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use implicit_series::{
    factor_out_root, furstenberg_solve, is_solution, lagrange, solve_series, taylor_residual,
    BiSeries, Exactness, Field, FieldDescriptor, ImplicitProblem, LagrangeVariant, Method,
    PrimeField, Problem, Rationals, RootProblem, UniSeries,
};

use expr::{format_polynomial, parse_expression, ExprError};
use output::{
    format_factor, format_hasse, format_output, format_verify, FactorRecord, HasseRecord,
    MethodResult, OutputMode, OutputRecord, VerifyRecord,
};

#[derive(Debug, Parser)]
#[command(name = "implicit-series", version, about = "Exact coefficients of f = P(X, f) over Q and GF(p)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// `q` for the rationals or `fp:<p>` for GF(p).
    #[arg(long)]
    pub field: String,
    /// plain | json
    #[arg(long, default_value = "plain")]
    pub output: OutputMode,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve f = P(X, f) up to the given order.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        order: usize,
        /// theorem | char0 | fixpoint | furstenberg
        #[arg(long, default_value = "theorem")]
        method: Method,
        /// Treat the expression as an infinite series known only on this box (`NxM`).
        #[arg(long, value_parser = parse_box)]
        series_box: Option<(usize, usize)>,
    },
    /// Lagrange inversion for f = X phi(f).
    Lagrange {
        #[command(flatten)]
        common: Common,
        /// Expression in Y.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        order: usize,
        /// general | char0
        #[arg(long, default_value = "general")]
        variant: LagrangeVariant,
    },
    /// Hasse derivative P^[m] with respect to Y.
    Hasse {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        m: usize,
        /// Truncation box `NxM`.
        #[arg(long = "box", value_parser = parse_box)]
        bounds: (usize, usize),
    },
    /// Root f of Q(X, f) = 0 and the cofactor R with Q = (Y - f) R.
    Factor {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        order: usize,
    },
    /// Run every applicable method and report whether they agree.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        order: usize,
    },
    /// Principal diagonal of a bivariate expression.
    Diag {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        order: usize,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Solve { common, .. }
            | Command::Lagrange { common, .. }
            | Command::Hasse { common, .. }
            | Command::Factor { common, .. }
            | Command::Verify { common, .. }
            | Command::Diag { common, .. } => common,
        }
    }
}

fn parse_box(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(['x', ','])
        .ok_or_else(|| format!("expected a box like `4x4`, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad box `{s}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[derive(Debug)]
pub enum CliError {
    Expression(ExprError),
    Domain(implicit_series::Error),
    Invalid(String),
    /// Computation finished but the methods disagree.
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Expression(e) if e.is_syntax() => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Expression(e) => write!(f, "{e}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Invalid(msg) => f.write_str(msg),
            CliError::Disagreement(_) => f.write_str("methods disagree"),
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Expression(e)
    }
}

impl From<implicit_series::Error> for CliError {
    fn from(e: implicit_series::Error) -> Self {
        CliError::Domain(e)
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// results to `out`, diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(CliError::Disagreement(text)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: methods disagree");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command and returns what it prints.
pub fn execute(command: &Command) -> Result<String, CliError> {
    let descriptor: FieldDescriptor = command.common().field.parse().map_err(CliError::Invalid)?;
    match descriptor {
        FieldDescriptor::Rationals => execute_in(&Rationals, command),
        FieldDescriptor::PrimeField(p) => {
            execute_in(&PrimeField::new(u64::from(p))?, command)
        }
    }
}

fn execute_in<F: Field>(k: &F, command: &Command) -> Result<String, CliError> {
    let mode = command.common().output;
    let field = k.descriptor().to_string();
    match command {
        Command::Solve {
            poly,
            order,
            method,
            series_box,
            ..
        } => {
            let prob = implicit_input(k, poly, *order, *series_box)?;
            let report = solve_series(&prob.into(), *order, *method)?;
            let record = OutputRecord {
                method: method.to_string(),
                field,
                order: *order,
                coeffs: render(k, &report.solution),
                residual_zero: Some(report.residual_norm_zero),
            };
            Ok(format_output(&record, mode))
        }
        Command::Lagrange {
            phi,
            order,
            variant,
            ..
        } => {
            let e = parse_expression(phi, k.descriptor())?;
            if e.mentions_x() {
                return Err(CliError::Invalid("phi must be an expression in Y only".into()));
            }
            let degree = to_usize(e.degree_bound().1)?;
            let phi_series = e.lower(k, 0, degree.max(order.saturating_sub(1)))?.x_row(0);
            let mut coeffs = vec![k.zero()];
            for n in 1..=*order {
                coeffs.push(lagrange(&phi_series, n, *variant)?);
            }
            let f = UniSeries::from_coeffs(k.clone(), coeffs);
            // X * phi(Y)
            let p = BiSeries::from_fn(k.clone(), (*order).max(1), phi_series.order(), |i, j| {
                if i == 1 {
                    phi_series.coeffs()[j].clone()
                } else {
                    k.zero()
                }
            });
            let residual_zero = is_solution(&ImplicitProblem::polynomial(p)?, &f)?;
            let record = OutputRecord {
                method: format!("lagrange-{variant}"),
                field,
                order: *order,
                coeffs: render(k, &f),
                residual_zero: Some(residual_zero),
            };
            Ok(format_output(&record, mode))
        }
        Command::Hasse { poly, m, bounds, .. } => {
            let e = parse_expression(poly, k.descriptor())?;
            let p = e.lower(k, bounds.0, bounds.1)?;
            let h = p.hasse_derivative(*m)?;
            let record = HasseRecord {
                method: "hasse".into(),
                field,
                m: *m,
                result_box: [h.x_order(), h.y_order()],
                poly: format_polynomial(&h),
            };
            Ok(format_hasse(&record, mode))
        }
        Command::Factor { poly, order, .. } => {
            let (q, exactness) = lower_for_order(k, poly, *order, *order)?;
            let rp = RootProblem::new(q, exactness)?;
            let f = furstenberg_solve(&rp, *order)?;
            let r = factor_out_root(&rp, &f)?;
            let (nx, ny) = rp.q().shape();
            let linear = BiSeries::y(k.clone(), nx, ny).sub(&BiSeries::from_x_series(&f, ny))?;
            let product_matches = linear.mul(&r.resized(nx, ny))? == *rp.q();
            let residual_zero = is_solution(&rp.to_implicit_problem(), &f)?;
            let record = FactorRecord {
                root: OutputRecord {
                    method: "factor".into(),
                    field,
                    order: *order,
                    coeffs: render(k, &f),
                    residual_zero: Some(residual_zero),
                },
                cofactor: format_polynomial(&r),
                cofactor_box: [r.x_order(), r.y_order()],
                product_matches,
            };
            Ok(format_factor(&record, mode))
        }
        Command::Verify { poly, order, .. } => verify(k, poly, *order, mode),
        Command::Diag { poly, order, .. } => {
            let e = parse_expression(poly, k.descriptor())?;
            let d = e.lower(k, *order, *order)?.diagonal();
            let record = OutputRecord {
                method: "diag".into(),
                field,
                order: *order,
                coeffs: render(k, &d),
                residual_zero: None,
            };
            Ok(format_output(&record, mode))
        }
    }
}

fn verify<F: Field>(k: &F, poly: &str, order: usize, mode: OutputMode) -> Result<String, CliError> {
    let prob: Problem<F> = implicit_input(k, poly, order, None)?.into();
    let reference = solve_series(&prob, order, Method::FixedPoint)?;
    let mut methods = Vec::new();
    let mut agree = reference.residual_norm_zero;
    for method in Method::ALL {
        if !method.supports_characteristic(k.characteristic()) {
            continue;
        }
        let report = solve_series(&prob, order, method)?;
        let agrees = report.solution == reference.solution;
        agree &= agrees && report.residual_norm_zero;
        methods.push(MethodResult {
            method: method.to_string(),
            coeffs: render(k, &report.solution),
            residual_zero: report.residual_norm_zero,
            agrees,
        });
    }
    let p = prob.implicit().p_on_box(order, order.max(1))?;
    let taylor_residual_zero = taylor_residual(&p, &reference.solution)?.is_zero();
    agree &= taylor_residual_zero;
    let record = VerifyRecord {
        reference: OutputRecord {
            method: "verify".into(),
            field: k.descriptor().to_string(),
            order,
            coeffs: render(k, &reference.solution),
            residual_zero: Some(reference.residual_norm_zero),
        },
        methods,
        taylor_residual_zero,
        agree,
    };
    let text = format_verify(&record, mode);
    if agree {
        Ok(text)
    } else {
        Err(CliError::Disagreement(text))
    }
}

fn to_usize(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Invalid(format!("degree {n} is too large")))
}

/// Lowers an expression on a box wide enough for order `n` with `Y`-order
/// at least `y_needed`. `X` beyond `n` never influences coefficients up to
/// `X^n`, so the `X` direction is cut at `n`; the result is exact unless that
/// cut removed terms.
fn lower_for_order<F: Field>(
    k: &F,
    text: &str,
    n: usize,
    y_needed: usize,
) -> Result<(BiSeries<F>, Exactness), CliError> {
    let e = parse_expression(text, k.descriptor())?;
    let (dx, dy) = e.degree_bound();
    let dy = to_usize(dy)?;
    let exactness = if dx <= n as u64 {
        Exactness::Polynomial
    } else {
        Exactness::Truncated
    };
    Ok((e.lower(k, n, dy.max(y_needed).max(1))?, exactness))
}

fn implicit_input<F: Field>(
    k: &F,
    text: &str,
    n: usize,
    series_box: Option<(usize, usize)>,
) -> Result<ImplicitProblem<F>, CliError> {
    match series_box {
        Some((nx, ny)) => {
            let e = parse_expression(text, k.descriptor())?;
            Ok(ImplicitProblem::truncated(e.lower(k, nx, ny)?)?)
        }
        None => {
            let (p, exactness) = lower_for_order(k, text, n, 2 * n)?;
            Ok(ImplicitProblem::new(p, exactness)?)
        }
    }
}

fn render<F: Field>(k: &F, f: &UniSeries<F>) -> Vec<String> {
    f.coeffs().iter().map(|c| k.format(c)).collect()
}
