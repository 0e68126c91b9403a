use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{ElementValue, Field, FieldDescriptor, FieldElement};
use crate::error::Result;

/// A residue class modulo the field's prime, always reduced into `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Residue(u32);

impl Residue {
    pub fn value(self) -> u32 {
        self.0
    }
}

/// The prime field `GF(p)` for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        FieldDescriptor::prime(p).map(|d| Self {
            p: d.modulus().expect("prime descriptor"),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn residue(&self, n: i64) -> Residue {
        Residue(n.rem_euclid(i64::from(self.p)) as u32)
    }

    fn reduce(&self, n: u64) -> Residue {
        Residue((n % u64::from(self.p)) as u32)
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField(self.p)
    }

    fn zero(&self) -> Residue {
        Residue(0)
    }

    fn one(&self) -> Residue {
        // p >= 2
        Residue(1)
    }

    fn is_zero(&self, a: &Residue) -> bool {
        a.0 == 0
    }

    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        self.reduce(u64::from(a.0) + u64::from(b.0))
    }

    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        self.reduce(u64::from(a.0) + u64::from(self.p) - u64::from(b.0))
    }

    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        self.reduce(u64::from(a.0) * u64::from(b.0))
    }

    fn neg(&self, a: &Residue) -> Residue {
        if a.0 == 0 {
            *a
        } else {
            Residue(self.p - a.0)
        }
    }

    /// Extended Euclid on `(a, p)`.
    fn inv(&self, a: &Residue) -> Option<Residue> {
        if a.0 == 0 {
            return None;
        }
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(a.0));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.residue(t0))
    }

    fn mul_add_assign(&self, acc: &mut Residue, a: &Residue, b: &Residue) {
        *acc = self.reduce(u64::from(acc.0) + u64::from(a.0) * u64::from(b.0));
    }

    fn from_bigint(&self, n: &BigInt) -> Residue {
        let r = n.mod_floor(&BigInt::from(self.p));
        Residue(r.to_u32().expect("residue below modulus"))
    }

    fn from_i64(&self, n: i64) -> Residue {
        self.residue(n)
    }

    fn to_element(&self, a: &Residue) -> FieldElement {
        FieldElement::from_parts(self.descriptor(), ElementValue::Residue(a.0))
    }
}
