//! Exact coefficient fields.
//!
//! Series code is written against the [`Field`] trait, which is a handle on
//! a field structure rather than on its elements: prime fields carry their
//! modulus at runtime, so constants such as zero and one have to be produced
//! by the structure. [`Rationals`] and [`PrimeField`] are the two instances.
//!
//! [`FieldElement`] is the self-describing counterpart used at API
//! boundaries: it carries its [`FieldDescriptor`] and refuses to mix with
//! elements of another field.

mod element;
mod prime;
mod rational;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use element::{field_ops, ElementValue, FieldElement, FieldOp};
pub use prime::{PrimeField, Residue};
pub use rational::Rationals;

use crate::error::{Error, Result};

/// Largest admissible modulus, exclusive. Products of two residues fit in a `u64`.
pub const MODULUS_BOUND: u64 = 1 << 31;

/// Which field a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u32),
}

impl FieldDescriptor {
    /// Builds `GF(p)`, checking that `p` is a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p < MODULUS_BOUND && is_prime(p) {
            Ok(Self::PrimeField(p as u32))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Self::Rationals => 0,
            Self::PrimeField(p) => u64::from(*p),
        }
    }

    pub fn modulus(&self) -> Option<u32> {
        match self {
            Self::Rationals => None,
            Self::PrimeField(p) => Some(*p),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => f.write_str("q"),
            Self::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Parses `q` (also `Q`) or `fp:<p>`.
impl FromStr for FieldDescriptor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Self::Rationals);
        }
        let modulus = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("FP:"))
            .ok_or_else(|| format!("unknown field `{s}`, expected `q` or `fp:<prime>`"))?;
        let p: u64 = modulus
            .parse()
            .map_err(|_| format!("invalid modulus `{modulus}`"))?;
        Self::prime(p).map_err(|e| e.to_string())
    }
}

/// Deterministic trial division; fine for the bounded range of moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A field structure acting on its element type.
///
/// All operations are exact. Elements handed to a `Field` must have been
/// produced by an equal `Field` value; series types enforce this by checking
/// [`Field::descriptor`] equality before combining operands.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;

    fn characteristic(&self) -> u64 {
        self.descriptor().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    /// The image of an integer under the canonical map `Z -> K`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// `num / den`, or `None` when `den` maps to zero in this field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem> {
        let den = self.inv(&self.from_bigint(den))?;
        Some(self.mul(&self.from_bigint(num), &den))
    }

    /// Tags an element with this field's descriptor.
    fn to_element(&self, a: &Self::Elem) -> FieldElement;

    /// Canonical text form: `num/den` (den omitted when 1) or the residue.
    fn format(&self, a: &Self::Elem) -> String {
        self.to_element(a).to_string()
    }
}
