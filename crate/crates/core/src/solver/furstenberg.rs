use super::RootProblem;
use crate::error::Result;
use crate::field::Field;
use crate::series::UniSeries;

/// The root `f` of `Q(X, f) = 0` with `f(0) = 0`, read off as the diagonal of
/// `Y^2 Q'_Y(XY, Y) / Q(XY, Y)`.
///
/// `Q(0,0) = 0` makes every monomial of `Q(XY, Y)` divisible by `Y`, and the
/// quotient `U = Q(XY, Y) / Y` has constant term `Q'_Y(0,0) != 0`. The
/// diagonal is therefore taken of `Y Q'_Y(XY, Y) U^(-1)`, which stays inside
/// ordinary power series.
pub fn furstenberg_solve<F: Field>(rp: &RootProblem<F>, n_max: usize) -> Result<UniSeries<F>> {
    let k = rp.field().clone();
    if n_max == 0 {
        return Ok(UniSeries::zero(k, 0));
    }
    let q = rp.q_on_box(n_max, n_max)?;
    let unit = q
        .subst_x_times_y()
        .div_y()
        .expect("Q(0,0) = 0 leaves no Y-free monomial after X -> XY");
    let numerator = q.partial_y()?.subst_x_times_y().shift_y();
    let (nx, ny) = unit.shape();
    let integrand = numerator.truncated(nx, ny).mul(&unit.reciprocal()?)?;
    Ok(integrand.diagonal())
}
