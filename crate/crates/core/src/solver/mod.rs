//! Solvers for `f = P(X, f)` and `Q(X, f) = 0`.
//!
//! Four independent routes produce the same coefficients: plain fixed-point
//! iteration, the characteristic-free extraction formula, its
//! characteristic-0 specialization, and the diagonal of a rational
//! bivariate series. The Taylor expansion in Hasse derivatives and the
//! factorization `Q = (Y - f) R` are exposed for verification.

mod factor;
mod fixed_point;
mod furstenberg;
mod lagrange;
mod problem;
mod taylor;
mod theorem;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

pub use factor::factor_out_root;
pub use fixed_point::solve_fixed_point;
pub use furstenberg::furstenberg_solve;
pub use lagrange::{lagrange, LagrangeVariant};
pub use problem::{validate_problem, Exactness, ImplicitProblem, RootProblem};
pub use taylor::taylor_residual;
pub use theorem::{
    char0_terms, coeff_char0, coeff_main_theorem, main_theorem_terms, summation_bound,
};

use crate::error::Result;
use crate::field::Field;
use crate::series::UniSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    MainTheorem,
    Char0,
    FixedPoint,
    Furstenberg,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::MainTheorem,
        Method::Char0,
        Method::FixedPoint,
        Method::Furstenberg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::MainTheorem => "theorem",
            Method::Char0 => "char0",
            Method::FixedPoint => "fixpoint",
            Method::Furstenberg => "furstenberg",
        }
    }

    /// Whether the method is defined over a field of this characteristic.
    pub fn supports_characteristic(self, characteristic: u64) -> bool {
        self != Method::Char0 || characteristic == 0
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`, expected theorem|char0|fixpoint|furstenberg"))
    }
}

/// Either form of the input; each converts into the other.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem<F: Field> {
    Implicit(ImplicitProblem<F>),
    Root(RootProblem<F>),
}

impl<F: Field> Problem<F> {
    pub fn implicit(&self) -> ImplicitProblem<F> {
        match self {
            Problem::Implicit(p) => p.clone(),
            Problem::Root(r) => r.to_implicit_problem(),
        }
    }

    pub fn root(&self) -> RootProblem<F> {
        match self {
            Problem::Implicit(p) => p.to_root_problem(),
            Problem::Root(r) => r.clone(),
        }
    }
}

impl<F: Field> From<ImplicitProblem<F>> for Problem<F> {
    fn from(p: ImplicitProblem<F>) -> Self {
        Problem::Implicit(p)
    }
}

impl<F: Field> From<RootProblem<F>> for Problem<F> {
    fn from(r: RootProblem<F>) -> Self {
        Problem::Root(r)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<F: Field> {
    pub method: Method,
    pub solution: UniSeries<F>,
    /// Outcome of substituting `solution` back: `P(X, f) - f = 0` mod `X^(N+1)`.
    pub residual_norm_zero: bool,
    /// The `m` range summed, for the extraction formulas.
    pub m_terms_used: Option<RangeInclusive<usize>>,
}

/// Solves to order `n_max` with the chosen method and re-substitutes the
/// result into `P`.
pub fn solve_series<F: Field>(
    problem: &Problem<F>,
    n_max: usize,
    method: Method,
) -> Result<SolveReport<F>> {
    let implicit = problem.implicit();
    let k = implicit.field().clone();
    let extraction_range = (n_max >= 1).then(|| 1..=summation_bound(n_max));
    let (solution, m_terms_used) = match method {
        Method::FixedPoint => (solve_fixed_point(&implicit, n_max)?, None),
        Method::Furstenberg => (furstenberg_solve(&problem.root(), n_max)?, None),
        Method::MainTheorem => {
            let terms = main_theorem_terms(&implicit, n_max, summation_bound(n_max))?;
            let coeffs = theorem::series_from_terms(&k, &terms, n_max);
            (UniSeries::from_coeffs(k.clone(), coeffs), extraction_range)
        }
        Method::Char0 => {
            let terms = char0_terms(&implicit, n_max, summation_bound(n_max))?;
            let coeffs = theorem::series_from_terms(&k, &terms, n_max);
            (UniSeries::from_coeffs(k.clone(), coeffs), extraction_range)
        }
    };
    let residual_norm_zero = is_solution(&implicit, &solution)?;
    Ok(SolveReport {
        method,
        solution,
        residual_norm_zero,
        m_terms_used,
    })
}

/// `P(X, f) = f` modulo `X^(order(f)+1)`.
pub fn is_solution<F: Field>(prob: &ImplicitProblem<F>, f: &UniSeries<F>) -> Result<bool> {
    let p = prob.p_on_box(f.order(), f.order().max(1))?;
    Ok(p.subst_y(f)? == *f)
}
