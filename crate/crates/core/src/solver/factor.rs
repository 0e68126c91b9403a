use super::RootProblem;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::{BiSeries, UniSeries};

/// Divides `Q` by `Y - f(X)`, returning `R` with `Q = (Y - f) R`.
///
/// `Q` is read as a polynomial in `Y` over series in `X` and divided
/// synthetically. The remainder is `Q(X, f(X))`; it must vanish modulo
/// `X^(Nx+1)` or the call fails with `NotARoot`. `R` has `Y`-order `Ny - 1`.
pub fn factor_out_root<F: Field>(rp: &RootProblem<F>, f: &UniSeries<F>) -> Result<BiSeries<F>> {
    let q = rp.q();
    let k = q.field();
    if !k.is_zero(f.constant_term()) {
        return Err(Error::NonzeroConstantTerm);
    }
    let (nx, ny) = q.shape();
    if f.order() < nx {
        return Err(Error::OrderExceeded {
            requested: nx,
            available: f.order(),
        });
    }
    let f = f.truncated(nx);
    // ny >= 1 for any validated root problem.
    let mut rows = vec![UniSeries::zero(k.clone(), nx); ny];
    rows[ny - 1] = q.y_row(ny);
    for j in (1..ny).rev() {
        rows[j - 1] = q.y_row(j).add(&f.mul(&rows[j])?)?;
    }
    let remainder = q.y_row(0).add(&f.mul(&rows[0])?)?;
    if let Some(n) = remainder.coeffs().iter().position(|c| !k.is_zero(c)) {
        return Err(Error::NotARoot(n));
    }
    Ok(BiSeries::from_y_rows(&rows))
}
