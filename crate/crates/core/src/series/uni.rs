use crate::error::{Error, Result};
use crate::field::Field;

/// A univariate power series known modulo `X^(order+1)`.
///
/// Coefficients are stored densely as `c_0, ..., c_order`. Trailing zeros are
/// kept: the order records how much is known, not where the support ends.
#[derive(Debug, Clone, PartialEq)]
pub struct UniSeries<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniSeries<F> {
    pub fn zero(field: F, order: usize) -> Self {
        let coeffs = vec![field.zero(); order + 1];
        Self { field, coeffs }
    }

    pub fn constant(field: F, c: F::Elem, order: usize) -> Self {
        let mut s = Self::zero(field, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(field: F, order: usize) -> Self {
        let one = field.one();
        Self::constant(field, one, order)
    }

    /// The series `X` (zero when `order` is 0).
    pub fn x(field: F, order: usize) -> Self {
        let mut s = Self::zero(field, order);
        if order >= 1 {
            s.coeffs[1] = s.field.one();
        }
        s
    }

    /// Builds a series from `c_0..c_N`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(field: F, coeffs: Vec<F::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a series knows at least its constant term");
        Self { field, coeffs }
    }

    pub fn from_fn(field: F, order: usize, mut f: impl FnMut(usize) -> F::Elem) -> Self {
        let coeffs = (0..=order).map(&mut f).collect();
        Self { field, coeffs }
    }

    pub fn from_i64s(field: F, values: &[i64]) -> Self {
        let coeffs = values.iter().map(|&v| field.from_i64(v)).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// `[X^n] self`
    pub fn coeff(&self, n: usize) -> Result<&F::Elem> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfTruncation {
            index: (n, 0),
            bound: (self.order(), 0),
        })
    }

    pub fn constant_term(&self) -> &F::Elem {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// Drops everything above `X^order`.
    ///
    /// # Panics
    /// If `order` exceeds the current order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot truncate to a larger order");
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Raises the order by appending zeros. Only meaningful for exact
    /// (polynomial) data; never use it to fake knowledge of a truncation.
    pub fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if order + 1 > coeffs.len() {
            coeffs.resize(order + 1, self.field.zero());
        } else {
            coeffs.truncate(order + 1);
        }
        Self {
            field: self.field.clone(),
            coeffs,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.descriptor(),
                other.field.descriptor(),
            ));
        }
        if self.order() != other.order() {
            return Err(Error::ShapeMismatch {
                left: (self.order(), 0),
                right: (other.order(), 0),
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
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let k = &self.field;
        let n = self.order();
        let mut out = vec![k.zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                k.mul_add_assign(&mut out[i + j], a, b);
            }
        }
        Ok(Self {
            field: k.clone(),
            coeffs: out,
        })
    }

    pub fn pow(&self, m: u64) -> Self {
        let mut result = Self::one(self.field.clone(), self.order());
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
        }
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderExceeded {
                requested: 1,
                available: 0,
            });
        }
        let k = &self.field;
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| k.mul(&k.from_i64(i as i64 + 1), c))
            .collect();
        Ok(Self {
            field: k.clone(),
            coeffs,
        })
    }

    /// Multiplies by `X`. The result is known one order further.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.field.zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self {
            field: self.field.clone(),
            coeffs,
        }
    }
}
