use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::BiSeries;

/// How much of a bivariate datum is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    /// Every coefficient outside the stored box is zero.
    Polynomial,
    /// The stored box is a truncation of an unknown infinite series.
    Truncated,
}

fn fit_box<F: Field>(
    series: &BiSeries<F>,
    exactness: Exactness,
    x_order: usize,
    y_order: usize,
) -> Result<BiSeries<F>> {
    match exactness {
        Exactness::Polynomial => Ok(series.resized(x_order, y_order)),
        Exactness::Truncated => {
            if series.x_order() < x_order || series.y_order() < y_order {
                Err(Error::InsufficientTruncation {
                    required: (x_order, y_order),
                    available: series.shape(),
                })
            } else {
                Ok(series.truncated(x_order, y_order))
            }
        }
    }
}

/// Makes sure the coefficient of `Y` is stored, padding exact data.
fn with_linear_y<F: Field>(series: BiSeries<F>, exactness: Exactness) -> Result<BiSeries<F>> {
    if series.y_order() >= 1 {
        return Ok(series);
    }
    match exactness {
        Exactness::Polynomial => Ok(series.resized(series.x_order(), 1)),
        Exactness::Truncated => Err(Error::InsufficientTruncation {
            required: (0, 1),
            available: series.shape(),
        }),
    }
}

/// A validated instance of `f = P(X, f)` with `P(0,0) = 0` and
/// `P'_Y(0,0) = 0`, which has a unique solution with `f(0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImplicitProblem<F: Field> {
    p: BiSeries<F>,
    exactness: Exactness,
}

impl<F: Field> ImplicitProblem<F> {
    pub fn new(p: BiSeries<F>, exactness: Exactness) -> Result<Self> {
        let p = with_linear_y(p, exactness)?;
        let k = p.field();
        if !k.is_zero(p.coeff(0, 0)?) {
            return Err(Error::NonzeroConstantTerm);
        }
        if !k.is_zero(p.coeff(0, 1)?) {
            return Err(Error::NonzeroLinearYTerm);
        }
        Ok(Self { p, exactness })
    }

    /// `P` is a polynomial given completely by its box.
    pub fn polynomial(p: BiSeries<F>) -> Result<Self> {
        Self::new(p, Exactness::Polynomial)
    }

    /// `P` is only known on its box.
    pub fn truncated(p: BiSeries<F>) -> Result<Self> {
        Self::new(p, Exactness::Truncated)
    }

    pub fn field(&self) -> &F {
        self.p.field()
    }

    pub fn p(&self) -> &BiSeries<F> {
        &self.p
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn is_polynomial(&self) -> bool {
        self.exactness == Exactness::Polynomial
    }

    /// `P` on exactly the box `(x_order, y_order)`, or
    /// `InsufficientTruncation` if a truncated datum does not cover it.
    pub fn p_on_box(&self, x_order: usize, y_order: usize) -> Result<BiSeries<F>> {
        fit_box(&self.p, self.exactness, x_order, y_order)
    }

    /// `Q = P - Y`, whose root is the solution of this problem.
    pub fn to_root_problem(&self) -> RootProblem<F> {
        let (nx, ny) = self.p.shape();
        let y = BiSeries::y(self.field().clone(), nx, ny);
        let q = self.p.sub(&y).expect("same shape");
        RootProblem::new(q, self.exactness).expect("P'_Y(0,0) = 0 gives Q'_Y(0,0) = -1")
    }
}

/// A validated root-finding instance `Q(X, f) = 0` with `Q(0,0) = 0` and
/// `Q'_Y(0,0) != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootProblem<F: Field> {
    q: BiSeries<F>,
    exactness: Exactness,
}

impl<F: Field> RootProblem<F> {
    pub fn new(q: BiSeries<F>, exactness: Exactness) -> Result<Self> {
        let q = with_linear_y(q, exactness)?;
        let k = q.field();
        if !k.is_zero(q.coeff(0, 0)?) {
            return Err(Error::NonzeroConstantTerm);
        }
        if k.is_zero(q.coeff(0, 1)?) {
            return Err(Error::ZeroLinearYTerm);
        }
        Ok(Self { q, exactness })
    }

    pub fn polynomial(q: BiSeries<F>) -> Result<Self> {
        Self::new(q, Exactness::Polynomial)
    }

    pub fn truncated(q: BiSeries<F>) -> Result<Self> {
        Self::new(q, Exactness::Truncated)
    }

    pub fn field(&self) -> &F {
        self.q.field()
    }

    pub fn q(&self) -> &BiSeries<F> {
        &self.q
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn q_on_box(&self, x_order: usize, y_order: usize) -> Result<BiSeries<F>> {
        fit_box(&self.q, self.exactness, x_order, y_order)
    }

    /// The equivalent fixed-point form `P = Y - Q / Q'_Y(0,0)`.
    pub fn to_implicit_problem(&self) -> ImplicitProblem<F> {
        let k = self.field();
        let c = k.inv(self.q.coeff(0, 1).expect("validated")).expect("nonzero");
        let (nx, ny) = self.q.shape();
        let y = BiSeries::y(k.clone(), nx, ny);
        let p = y.sub(&self.q.scale(&c)).expect("same shape");
        ImplicitProblem::new(p, self.exactness).expect("normalized linear term cancels")
    }
}

/// Checks the hypotheses of the extraction theorem on `p`, treating it as
/// an exact polynomial.
pub fn validate_problem<F: Field>(p: BiSeries<F>) -> Result<ImplicitProblem<F>> {
    ImplicitProblem::polynomial(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(nx: usize, ny: usize, terms: &[(usize, usize, i64)]) -> BiSeries<Rationals> {
        BiSeries::from_terms(Rationals, nx, ny, terms)
    }

    #[test]
    fn validation() {
        assert!(validate_problem(q(2, 2, &[(1, 0, 1), (0, 2, 1)])).is_ok());
        assert_eq!(
            validate_problem(q(2, 2, &[(0, 1, 1)])),
            Err(Error::NonzeroLinearYTerm)
        );
        assert_eq!(
            validate_problem(q(2, 2, &[(0, 0, 1), (1, 0, 1)])),
            Err(Error::NonzeroConstantTerm)
        );
        // A Y-free polynomial is padded so that its linear Y term is visible.
        let p = validate_problem(q(3, 0, &[(1, 0, 1)])).unwrap();
        assert_eq!(p.p().shape(), (3, 1));
        assert!(ImplicitProblem::truncated(q(3, 0, &[(1, 0, 1)])).is_err());
    }

    #[test]
    fn root_problem_validation() {
        assert!(RootProblem::polynomial(q(2, 2, &[(0, 1, 1), (1, 0, -1)])).is_ok());
        assert_eq!(
            RootProblem::polynomial(q(2, 2, &[(1, 0, 1), (0, 2, 1)])),
            Err(Error::ZeroLinearYTerm)
        );
        assert_eq!(
            RootProblem::polynomial(q(2, 2, &[(0, 0, 2), (0, 1, 1)])),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn boxes_for_truncated_data() {
        let p = ImplicitProblem::truncated(q(3, 3, &[(1, 0, 1), (0, 2, 1)])).unwrap();
        assert_eq!(p.p_on_box(2, 3).unwrap().shape(), (2, 3));
        assert_eq!(
            p.p_on_box(3, 5),
            Err(Error::InsufficientTruncation {
                required: (3, 5),
                available: (3, 3)
            })
        );
        let exact = ImplicitProblem::polynomial(q(3, 3, &[(1, 0, 1), (0, 2, 1)])).unwrap();
        assert_eq!(exact.p_on_box(3, 5).unwrap().shape(), (3, 5));
    }

    #[test]
    fn conversions_between_forms() {
        let p = validate_problem(q(2, 2, &[(1, 0, 1), (0, 2, 1)])).unwrap();
        let rp = p.to_root_problem();
        assert_eq!(rp.q(), &q(2, 2, &[(1, 0, 1), (0, 2, 1), (0, 1, -1)]));
        assert_eq!(rp.to_implicit_problem(), p);
        let scaled = RootProblem::polynomial(q(2, 2, &[(0, 1, 2), (1, 0, -2), (0, 2, -2)])).unwrap();
        assert_eq!(scaled.to_implicit_problem(), p);
    }
}
