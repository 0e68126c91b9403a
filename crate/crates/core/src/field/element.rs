use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, FieldDescriptor, PrimeField, Rationals};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElementValue {
    Rational(BigRational),
    Residue(u32),
}

/// A field element that knows which field it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    descriptor: FieldDescriptor,
    value: ElementValue,
}

impl FieldElement {
    pub(crate) fn from_parts(descriptor: FieldDescriptor, value: ElementValue) -> Self {
        Self { descriptor, value }
    }

    /// The canonical image of `n` in the field described by `d`.
    pub fn from_integer(n: impl Into<BigInt>, d: FieldDescriptor) -> Self {
        let n = n.into();
        match d {
            FieldDescriptor::Rationals => Rationals.to_element(&Rationals.from_bigint(&n)),
            FieldDescriptor::PrimeField(p) => {
                let k = prime_field(p);
                k.to_element(&k.from_bigint(&n))
            }
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    pub fn value(&self) -> &ElementValue {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            ElementValue::Rational(q) => num_traits::Zero::is_zero(q),
            ElementValue::Residue(r) => *r == 0,
        }
    }

    pub fn apply(&self, other: &Self, op: FieldOp) -> Result<Self> {
        if self.descriptor != other.descriptor {
            return Err(Error::DescriptorMismatch(self.descriptor, other.descriptor));
        }
        match (&self.value, &other.value) {
            (ElementValue::Rational(a), ElementValue::Rational(b)) => {
                Ok(Rationals.to_element(&apply_in(&Rationals, a, b, op)?))
            }
            (ElementValue::Residue(a), ElementValue::Residue(b)) => {
                let k = prime_field(self.descriptor.modulus().expect("prime field"));
                let r = apply_in(&k, &k.residue(i64::from(*a)), &k.residue(i64::from(*b)), op)?;
                Ok(k.to_element(&r))
            }
            _ => unreachable!("value kind always matches the descriptor"),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Mul)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Div)
    }
}

fn prime_field(p: u32) -> PrimeField {
    PrimeField::new(u64::from(p)).expect("descriptor moduli are validated")
}

fn apply_in<F: Field>(k: &F, a: &F::Elem, b: &F::Elem, op: FieldOp) -> Result<F::Elem> {
    Ok(match op {
        FieldOp::Add => k.add(a, b),
        FieldOp::Sub => k.sub(a, b),
        FieldOp::Mul => k.mul(a, b),
        FieldOp::Div => k.div(a, b)?,
    })
}

/// `field_ops` entry point over tagged elements.
pub fn field_ops(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    a.apply(b, op)
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ElementValue::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ElementValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            ElementValue::Residue(r) => write!(f, "{r}"),
        }
    }
}
