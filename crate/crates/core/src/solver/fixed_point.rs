use super::ImplicitProblem;
use crate::error::Result;
use crate::field::Field;
use crate::series::UniSeries;

/// Solves `f = P(X, f)` by plain iteration `f <- P(X, f)` from `f = 0`.
///
/// This uses nothing but substitution, which makes it the reference the
/// extraction formulas are checked against. Because `P(0,0) = 0` and
/// `P'_Y(0,0) = 0`, each step fixes at least one more coefficient, so the
/// loop stabilizes after at most `n_max + 1` rounds.
pub fn solve_fixed_point<F: Field>(prob: &ImplicitProblem<F>, n_max: usize) -> Result<UniSeries<F>> {
    let p = prob.p_on_box(n_max, n_max)?;
    let mut f = UniSeries::zero(prob.field().clone(), n_max);
    for _ in 0..=n_max + 1 {
        let next = p.subst_y(&f)?;
        if next == f {
            return Ok(f);
        }
        f = next;
    }
    unreachable!("substitution is an X-adic contraction")
}
