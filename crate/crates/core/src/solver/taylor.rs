use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::{BiSeries, UniSeries};

/// `P(X,Y) - sum_{m=0}^{Ny} (Y - f(X))^m P^[m](X, f(X))` on the box of `P`.
///
/// The expansion around `Y = f(X)` uses Hasse derivatives, so it holds in
/// every characteristic and for every `f` with `f(0) = 0`; the result is
/// identically zero. The stored box of `P` is read as an exact polynomial,
/// so `P^[m] = 0` for `m > Ny`.
pub fn taylor_residual<F: Field>(p: &BiSeries<F>, f: &UniSeries<F>) -> Result<BiSeries<F>> {
    let k = p.field();
    if !k.is_zero(f.constant_term()) {
        return Err(Error::NonzeroConstantTerm);
    }
    let (nx, ny) = p.shape();
    if f.order() < nx {
        return Err(Error::OrderExceeded {
            requested: nx,
            available: f.order(),
        });
    }
    let f = f.truncated(nx);
    let shift = BiSeries::y(k.clone(), nx, ny).sub(&BiSeries::from_x_series(&f, ny))?;
    let mut expansion = BiSeries::zero(k.clone(), nx, ny);
    let mut power = BiSeries::one(k.clone(), nx, ny);
    for m in 0..=ny {
        let at_root = p.hasse_derivative(m)?.subst_y(&f)?;
        let term = power.mul(&BiSeries::from_x_series(&at_root, ny))?;
        expansion = expansion.add(&term)?;
        if m < ny {
            power = power.mul(&shift)?;
        }
    }
    p.sub(&expansion)
}
