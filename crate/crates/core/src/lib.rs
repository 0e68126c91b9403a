//! Exact solutions of implicit power series equations.
//!
//! Given `P(X, Y)` with `P(0,0) = 0` and `P'_Y(0,0) = 0`, the equation
//! `f = P(X, f)` has a unique power series solution with `f(0) = 0`. This
//! crate computes its coefficients exactly over the rationals and over prime
//! fields `GF(p)`, by several independent methods that must agree:
//!
//! * a characteristic-free extraction formula built on Hasse derivatives,
//! * its `1/m`-weighted characteristic-0 form,
//! * fixed-point iteration,
//! * the diagonal of a rational bivariate series.
//!
//! Everything is generic over [`Field`]; the aliases below name the two
//! concrete instances.
//!
//! ```
//! use implicit_series::{solve_series, BiSeries, ImplicitProblem, Method, Rationals};
//!
//! // f = X + f^2
//! let p = BiSeries::from_terms(Rationals, 6, 6, &[(1, 0, 1), (0, 2, 1)]);
//! let problem = ImplicitProblem::polynomial(p).unwrap().into();
//! let report = solve_series(&problem, 6, Method::MainTheorem).unwrap();
//! let catalan: Vec<String> = report.solution.coeffs().iter().map(|c| c.to_string()).collect();
//! assert_eq!(catalan, ["0", "1", "1", "2", "5", "14", "42"]);
//! ```

pub mod binomial;
pub mod error;
pub mod field;
pub mod series;
pub mod solver;

pub use error::{Error, Result};
pub use field::{
    field_ops, Field, FieldDescriptor, FieldElement, FieldOp, PrimeField, Rationals, Residue,
};
pub use series::{BiSeries, UniSeries};
pub use solver::{
    char0_terms, coeff_char0, coeff_main_theorem, factor_out_root, furstenberg_solve,
    is_solution, lagrange, main_theorem_terms, solve_fixed_point, solve_series,
    summation_bound, taylor_residual, validate_problem, Exactness, ImplicitProblem,
    LagrangeVariant, Method, Problem, RootProblem, SolveReport,
};

pub type QSeries = UniSeries<Rationals>;
pub type QBiSeries = BiSeries<Rationals>;
pub type QProblem = ImplicitProblem<Rationals>;
pub type FpSeries = UniSeries<PrimeField>;
pub type FpBiSeries = BiSeries<PrimeField>;
pub type FpProblem = ImplicitProblem<PrimeField>;
