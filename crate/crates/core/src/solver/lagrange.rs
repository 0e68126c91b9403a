use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::UniSeries;

/// Which form of Lagrange inversion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LagrangeVariant {
    /// `[Y^(n-1)] (phi^n - Y phi' phi^(n-1))`, valid in every characteristic.
    GeneralField,
    /// `(1/n) [Y^(n-1)] phi^n`, characteristic 0 only.
    Char0,
}

impl fmt::Display for LagrangeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::GeneralField => "general",
            Self::Char0 => "char0",
        })
    }
}

impl FromStr for LagrangeVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "general" => Ok(Self::GeneralField),
            "char0" => Ok(Self::Char0),
            other => Err(format!("unknown variant `{other}`, expected general|char0")),
        }
    }
}

/// `[X^n] f` where `f = X phi(f)`. `phi` is a series in `Y` with
/// `phi(0) != 0`, known to order at least `n - 1`.
pub fn lagrange<F: Field>(phi: &UniSeries<F>, n: usize, variant: LagrangeVariant) -> Result<F::Elem> {
    let k = phi.field();
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if k.is_zero(phi.constant_term()) {
        return Err(Error::ZeroConstantTerm);
    }
    if variant == LagrangeVariant::Char0 && k.characteristic() != 0 {
        return Err(Error::PositiveCharacteristicUnsupported(k.characteristic()));
    }
    if phi.order() < n - 1 {
        return Err(Error::OrderExceeded {
            requested: n - 1,
            available: phi.order(),
        });
    }
    let phi = phi.truncated(n - 1);
    let pow_n1 = phi.pow(n as u64 - 1);
    let pow_n = pow_n1.mul(&phi)?;
    match variant {
        LagrangeVariant::Char0 => {
            let inv_n = k.inv(&k.from_i64(n as i64)).expect("characteristic 0");
            Ok(k.mul(&inv_n, &pow_n.coeffs()[n - 1]))
        }
        LagrangeVariant::GeneralField => {
            let head = pow_n.coeffs()[n - 1].clone();
            if n == 1 {
                return Ok(head);
            }
            // Y * phi' is known to order n - 1 although phi' only to n - 2.
            let y_dphi = phi.derivative()?.shift();
            let tail = y_dphi.mul(&pow_n1)?;
            Ok(k.sub(&head, &tail.coeffs()[n - 1]))
        }
    }
}
