//! Coefficient extraction for `f = P(X, f)`:
//!
//! ```text
//! [X^n] f = sum_{m>=1} [X^n Y^(m-1)] (1 - P'_Y) P^m          (any field)
//! [X^n] f = sum_{m>=1} (1/m) [X^n Y^(m-1)] P^m               (characteristic 0)
//! ```
//!
//! Only `m <= 2n - 1` can contribute. Every monomial `X^i Y^j` of `P` has
//! `(i, j)` outside `{(0,0), (0,1)}`. In a product of `m` monomials landing
//! on `X^n Y^(m-1)`, the `k` factors with `i >= 1` number at most `n`, and the
//! other `m - k` factors each bring `Y`-degree at least 2. So
//! `m - 1 >= 2(m - k)`, hence `m <= 2k - 1 <= 2n - 1`.

use super::ImplicitProblem;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::BiSeries;

/// Largest `m` that can contribute to `[X^n] f`.
pub fn summation_bound(n: usize) -> usize {
    (2 * n).saturating_sub(1)
}

/// `[X^n Y^(m-1)]` of `weight * power` for every `n`, without forming the
/// full product.
fn product_row<F: Field>(
    weight: &[(usize, usize, F::Elem)],
    power: &BiSeries<F>,
    row: usize,
) -> Vec<F::Elem> {
    let k = power.field();
    (0..=power.x_order())
        .map(|n| {
            let mut acc = k.zero();
            for (a, b, w) in weight {
                if *a <= n && *b <= row {
                    let c = power.coeff(n - a, row - b).expect("inside box");
                    k.mul_add_assign(&mut acc, w, c);
                }
            }
            acc
        })
        .collect()
}

/// Individual terms of the characteristic-free sum.
///
/// `terms[m - 1][n] = [X^n Y^(m-1)] (1 - P'_Y) P^m` for `1 <= m <= m_max` and
/// `0 <= n <= n_max`. Needs `P` on the box `(n_max, m_max)`.
pub fn main_theorem_terms<F: Field>(
    prob: &ImplicitProblem<F>,
    n_max: usize,
    m_max: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    if m_max == 0 {
        return Ok(Vec::new());
    }
    let k = prob.field().clone();
    let p = prob.p_on_box(n_max, m_max)?;
    let dp = p.partial_y()?;
    let weight = BiSeries::one(k.clone(), n_max, m_max - 1).sub(&dp)?;
    let weight: Vec<_> = weight.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    let base = p.truncated(n_max, m_max - 1);
    running_power_rows(&base, m_max, |m, power| product_row(&weight, power, m - 1))
}

/// Individual terms of the characteristic-0 sum,
/// `terms[m - 1][n] = (1/m) [X^n Y^(m-1)] P^m`.
pub fn char0_terms<F: Field>(
    prob: &ImplicitProblem<F>,
    n_max: usize,
    m_max: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    let k = prob.field().clone();
    if k.characteristic() != 0 {
        return Err(Error::PositiveCharacteristicUnsupported(k.characteristic()));
    }
    if m_max == 0 {
        return Ok(Vec::new());
    }
    let p = prob.p_on_box(n_max, m_max)?;
    let base = p.truncated(n_max, m_max - 1);
    let unit = [(0, 0, k.one())];
    running_power_rows(&base, m_max, |m, power| {
        let inv_m = k.inv(&k.from_i64(m as i64)).expect("characteristic 0");
        product_row(&unit, power, m - 1)
            .iter()
            .map(|c| k.mul(&inv_m, c))
            .collect()
    })
}

/// Calls `row(m, P^m)` for `m = 1..=m_max`, keeping `P^m` as a running product.
fn running_power_rows<F: Field>(
    base: &BiSeries<F>,
    m_max: usize,
    mut row: impl FnMut(usize, &BiSeries<F>) -> Vec<F::Elem>,
) -> Result<Vec<Vec<F::Elem>>> {
    let mut power = base.clone();
    let mut rows = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        rows.push(row(m, &power));
        if m < m_max {
            power = power.mul(base)?;
        }
    }
    Ok(rows)
}

fn sum_column<F: Field>(k: &F, terms: &[Vec<F::Elem>], n: usize) -> F::Elem {
    terms
        .iter()
        .take(summation_bound(n))
        .fold(k.zero(), |acc, row| k.add(&acc, &row[n]))
}

/// `[X^n] f` by the characteristic-free formula, summing `m = 1..=2n-1`.
pub fn coeff_main_theorem<F: Field>(prob: &ImplicitProblem<F>, n: usize) -> Result<F::Elem> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let terms = main_theorem_terms(prob, n, summation_bound(n))?;
    Ok(sum_column(prob.field(), &terms, n))
}

/// `[X^n] f` by the `1/m`-weighted formula; characteristic 0 only.
pub fn coeff_char0<F: Field>(prob: &ImplicitProblem<F>, n: usize) -> Result<F::Elem> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let terms = char0_terms(prob, n, summation_bound(n))?;
    Ok(sum_column(prob.field(), &terms, n))
}

/// All coefficients `0..=n_max` from one table of terms.
pub(crate) fn series_from_terms<F: Field>(k: &F, terms: &[Vec<F::Elem>], n_max: usize) -> Vec<F::Elem> {
    let mut coeffs = vec![k.zero()];
    coeffs.extend((1..=n_max).map(|n| sum_column(k, terms, n)));
    coeffs
}
