use super::UniSeries;
use crate::binomial::pascal_triangle;
use crate::error::{Error, Result};
use crate::field::Field;

/// A bivariate power series known modulo the ideal `(X^(Nx+1), Y^(Ny+1))`.
///
/// Coefficients `a_ij` for `0 <= i <= Nx`, `0 <= j <= Ny` are stored densely,
/// row-major in the X-degree.
#[derive(Debug, Clone, PartialEq)]
pub struct BiSeries<F: Field> {
    field: F,
    x_order: usize,
    y_order: usize,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> BiSeries<F> {
    pub fn zero(field: F, x_order: usize, y_order: usize) -> Self {
        let coeffs = vec![field.zero(); (x_order + 1) * (y_order + 1)];
        Self {
            field,
            x_order,
            y_order,
            coeffs,
        }
    }

    pub fn constant(field: F, c: F::Elem, x_order: usize, y_order: usize) -> Self {
        let mut s = Self::zero(field, x_order, y_order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(field: F, x_order: usize, y_order: usize) -> Self {
        let one = field.one();
        Self::constant(field, one, x_order, y_order)
    }

    pub fn x(field: F, x_order: usize, y_order: usize) -> Self {
        Self::monomial(field, 1, 0, x_order, y_order)
    }

    pub fn y(field: F, x_order: usize, y_order: usize) -> Self {
        Self::monomial(field, 0, 1, x_order, y_order)
    }

    /// `X^i Y^j`, or zero when the monomial lies outside the box.
    pub fn monomial(field: F, i: usize, j: usize, x_order: usize, y_order: usize) -> Self {
        let mut s = Self::zero(field, x_order, y_order);
        if i <= x_order && j <= y_order {
            let one = s.field.one();
            *s.at_mut(i, j) = one;
        }
        s
    }

    pub fn from_fn(
        field: F,
        x_order: usize,
        y_order: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Self {
        let mut coeffs = Vec::with_capacity((x_order + 1) * (y_order + 1));
        for i in 0..=x_order {
            for j in 0..=y_order {
                coeffs.push(f(i, j));
            }
        }
        Self {
            field,
            x_order,
            y_order,
            coeffs,
        }
    }

    /// Sums integer-coefficient terms `(i, j, c)`; terms outside the box are dropped.
    pub fn from_terms(field: F, x_order: usize, y_order: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = Self::zero(field, x_order, y_order);
        for &(i, j, c) in terms {
            if i <= x_order && j <= y_order {
                let c = s.field.from_i64(c);
                let k = s.field.clone();
                k.add_assign(s.at_mut(i, j), &c);
            }
        }
        s
    }

    /// Stacks `rows[j]`, the coefficient of `Y^j` as a series in `X`.
    ///
    /// # Panics
    /// If `rows` is empty or the rows have different orders.
    pub fn from_y_rows(rows: &[UniSeries<F>]) -> Self {
        let first = rows.first().expect("at least one row");
        let x_order = first.order();
        assert!(rows.iter().all(|r| r.order() == x_order), "rows must share an order");
        Self::from_fn(first.field().clone(), x_order, rows.len() - 1, |i, j| {
            rows[j].coeffs()[i].clone()
        })
    }

    /// Embeds a series in `X` as a bivariate series with no `Y` dependence.
    pub fn from_x_series(f: &UniSeries<F>, y_order: usize) -> Self {
        let k = f.field().clone();
        Self::from_fn(k.clone(), f.order(), y_order, |i, j| {
            if j == 0 {
                f.coeffs()[i].clone()
            } else {
                k.zero()
            }
        })
    }

    /// Embeds a series in `Y` as a bivariate series with no `X` dependence.
    pub fn from_y_series(g: &UniSeries<F>, x_order: usize) -> Self {
        let k = g.field().clone();
        Self::from_fn(k.clone(), x_order, g.order(), |i, j| {
            if i == 0 {
                g.coeffs()[j].clone()
            } else {
                k.zero()
            }
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn y_order(&self) -> usize {
        self.y_order
    }

    /// `(Nx, Ny)`
    pub fn shape(&self) -> (usize, usize) {
        (self.x_order, self.y_order)
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.y_order + 1) + j
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.coeffs[self.idx(i, j)]
    }

    #[inline]
    fn at_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        let idx = self.idx(i, j);
        &mut self.coeffs[idx]
    }

    /// `[X^i Y^j] self`
    pub fn coeff(&self, i: usize, j: usize) -> Result<&F::Elem> {
        if i > self.x_order || j > self.y_order {
            return Err(Error::IndexOutOfTruncation {
                index: (i, j),
                bound: self.shape(),
            });
        }
        Ok(self.at(i, j))
    }

    /// Nonzero coefficients as `(i, j, a_ij)`, ordered by `i` then `j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &F::Elem)> + '_ {
        let width = self.y_order + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(move |(idx, c)| (idx / width, idx % width, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// Largest `j` with a nonzero coefficient of `Y^j`, `None` for zero.
    pub fn y_degree(&self) -> Option<usize> {
        self.terms().map(|(_, j, _)| j).max()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms().map(|(i, _, _)| i).max()
    }

    /// The coefficient of `Y^j` as a series in `X` (the `a_j(X)` of a
    /// `Y`-expansion).
    pub fn y_row(&self, j: usize) -> UniSeries<F> {
        UniSeries::from_fn(self.field.clone(), self.x_order, |i| self.at(i, j).clone())
    }

    /// The coefficient of `X^i` as a series in `Y`.
    pub fn x_row(&self, i: usize) -> UniSeries<F> {
        UniSeries::from_fn(self.field.clone(), self.y_order, |j| self.at(i, j).clone())
    }

    /// Restricts to a smaller box. Always sound.
    ///
    /// # Panics
    /// If the requested box is not contained in the current one.
    pub fn truncated(&self, x_order: usize, y_order: usize) -> Self {
        assert!(
            x_order <= self.x_order && y_order <= self.y_order,
            "cannot truncate {:?} to the larger box {:?}",
            self.shape(),
            (x_order, y_order)
        );
        self.resized(x_order, y_order)
    }

    /// Moves to an arbitrary box, dropping or zero-filling coefficients.
    /// Zero-filling is only sound for exact (polynomial) data.
    pub fn resized(&self, x_order: usize, y_order: usize) -> Self {
        let k = &self.field;
        Self::from_fn(k.clone(), x_order, y_order, |i, j| {
            if i <= self.x_order && j <= self.y_order {
                self.at(i, j).clone()
            } else {
                k.zero()
            }
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.descriptor(),
                other.field.descriptor(),
            ));
        }
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |k, a, b| k.add(a, b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |k, a, b| k.sub(a, b)))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| op(&self.field, a, b))
            .collect();
        Self {
            field: self.field.clone(),
            coeffs,
            ..*self
        }
    }

    /// Cauchy product truncated to the common box. Zero coefficients of
    /// either factor are skipped, so sparse operands multiply quickly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let k = &self.field;
        let (nx, ny) = self.shape();
        let mut out = Self::zero(k.clone(), nx, ny);
        let rhs: Vec<_> = other.terms().collect();
        for (i, j, a) in self.terms() {
            for &(p, q, b) in &rhs {
                if i + p <= nx && j + q <= ny {
                    k.mul_add_assign(out.at_mut(i + p, j + q), a, b);
                }
            }
        }
        Ok(out)
    }

    /// `self^m`; `pow(0)` is the constant 1.
    pub fn pow(&self, m: u64) -> Self {
        let (nx, ny) = self.shape();
        let mut result = Self::one(self.field.clone(), nx, ny);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        result
    }

    pub fn neg(&self) -> Self {
        self.map(|k, c| k.neg(c))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        self.map(|k, c| k.mul(s, c))
    }

    fn map(&self, op: impl Fn(&F, &F::Elem) -> F::Elem) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| op(&self.field, c)).collect(),
            ..*self
        }
    }

    /// `dP/dY`. The result is known to `Y`-order `Ny - 1`.
    pub fn partial_y(&self) -> Result<Self> {
        self.hasse_derivative(1)
    }

    /// The Hasse derivative `P^[m] = sum_{j>=m} binom(j, m) a_j(X) Y^(j-m)`.
    ///
    /// The binomials come from Pascal's triangle over `Z`, so this is
    /// defined in every characteristic. The result has `Y`-order `Ny - m`.
    pub fn hasse_derivative(&self, m: usize) -> Result<Self> {
        if m > self.y_order {
            return Err(Error::OrderExceeded {
                requested: m,
                available: self.y_order,
            });
        }
        let k = &self.field;
        let pascal = pascal_triangle(self.y_order);
        let weights: Vec<F::Elem> = (m..=self.y_order)
            .map(|j| k.from_bigint(&pascal[j][m]))
            .collect();
        Ok(Self::from_fn(k.clone(), self.x_order, self.y_order - m, |i, j| {
            k.mul(&weights[j], self.at(i, j + m))
        }))
    }

    /// `P(X, f(X))` modulo `X^(Nx+1)`, by Horner's scheme in `Y`.
    ///
    /// `f` must have zero constant term and be known to at least order `Nx`.
    pub fn subst_y(&self, f: &UniSeries<F>) -> Result<UniSeries<F>> {
        if self.field != *f.field() {
            return Err(Error::FieldMismatch(
                self.field.descriptor(),
                f.field().descriptor(),
            ));
        }
        if !self.field.is_zero(f.constant_term()) {
            return Err(Error::NonzeroConstantTerm);
        }
        if f.order() < self.x_order {
            return Err(Error::OrderExceeded {
                requested: self.x_order,
                available: f.order(),
            });
        }
        let f = f.truncated(self.x_order);
        // f^j vanishes modulo X^(Nx+1) once j > Nx.
        let top = match self.y_degree() {
            None => return Ok(UniSeries::zero(self.field.clone(), self.x_order)),
            Some(d) => d.min(self.x_order),
        };
        let mut acc = self.y_row(top);
        for j in (0..top).rev() {
            acc = acc.mul(&f)?.add(&self.y_row(j))?;
        }
        Ok(acc)
    }

    /// `P(XY, Y)`: the monomial `X^i Y^j` goes to `X^i Y^(i+j)`.
    ///
    /// The output box is `(Nx, Nx + Ny)`, the full image of the stored
    /// coefficients.
    pub fn subst_x_times_y(&self) -> Self {
        let (nx, ny) = self.shape();
        let mut out = Self::zero(self.field.clone(), nx, nx + ny);
        for i in 0..=nx {
            for j in 0..=ny {
                *out.at_mut(i, i + j) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Multiplies by `Y`; the result is known one `Y`-order further.
    pub fn shift_y(&self) -> Self {
        let k = &self.field;
        Self::from_fn(k.clone(), self.x_order, self.y_order + 1, |i, j| {
            if j == 0 {
                k.zero()
            } else {
                self.at(i, j - 1).clone()
            }
        })
    }

    /// Exact division by `Y`, or `None` if some `a_i0` is nonzero.
    pub fn div_y(&self) -> Option<Self> {
        if self.y_order == 0 || (0..=self.x_order).any(|i| !self.field.is_zero(self.at(i, 0))) {
            return None;
        }
        Some(Self::from_fn(
            self.field.clone(),
            self.x_order,
            self.y_order - 1,
            |i, j| self.at(i, j + 1).clone(),
        ))
    }

    /// Multiplicative inverse of a unit on the whole box.
    ///
    /// Solves `u * v = 1` coefficientwise in increasing `(i, j)` order:
    /// `v_ij = -u_00^(-1) * sum_{(k,l) != (0,0)} u_kl v_(i-k)(j-l)`.
    pub fn reciprocal(&self) -> Result<Self> {
        let k = &self.field;
        let inv_unit = k.inv(self.at(0, 0)).ok_or(Error::NotAUnit)?;
        let neg_inv = k.neg(&inv_unit);
        let tail: Vec<_> = self.terms().filter(|&(i, j, _)| (i, j) != (0, 0)).collect();
        let (nx, ny) = self.shape();
        let mut v = Self::zero(k.clone(), nx, ny);
        *v.at_mut(0, 0) = inv_unit;
        for i in 0..=nx {
            for j in 0..=ny {
                if (i, j) == (0, 0) {
                    continue;
                }
                let mut acc = k.zero();
                for &(p, q, u) in &tail {
                    if p <= i && q <= j {
                        k.mul_add_assign(&mut acc, u, v.at(i - p, j - q));
                    }
                }
                *v.at_mut(i, j) = k.mul(&neg_inv, &acc);
            }
        }
        Ok(v)
    }

    /// The principal diagonal `sum_n a_nn T^n`, of order `min(Nx, Ny)`.
    pub fn diagonal(&self) -> UniSeries<F> {
        let n = self.x_order.min(self.y_order);
        UniSeries::from_fn(self.field.clone(), n, |i| self.at(i, i).clone())
    }
}
