use thiserror::Error;

use crate::field::FieldDescriptor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field descriptors differ: {0} vs {1}")]
    DescriptorMismatch(FieldDescriptor, FieldDescriptor),
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    InvalidModulus(u64),

    #[error("operand shapes differ: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("operands live over different fields: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("requested order {requested} exceeds the available order {available}")]
    OrderExceeded { requested: usize, available: usize },
    #[error("index {index:?} lies outside the truncation box {bound:?}")]
    IndexOutOfTruncation {
        index: (usize, usize),
        bound: (usize, usize),
    },
    #[error("series is not a unit (zero constant term)")]
    NotAUnit,

    #[error("P(0,0) must be zero")]
    NonzeroConstantTerm,
    #[error("the coefficient of Y in P must be zero (P'_Y(0,0) = 0)")]
    NonzeroLinearYTerm,
    #[error("the coefficient of Y in Q must be nonzero (Q'_Y(0,0) != 0)")]
    ZeroLinearYTerm,
    #[error("phi(0) must be nonzero")]
    ZeroConstantTerm,
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("insufficient truncation: input known on box {available:?} but box {required:?} is required")]
    InsufficientTruncation {
        required: (usize, usize),
        available: (usize, usize),
    },
    #[error("formula divides by integers and needs characteristic 0, field has characteristic {0}")]
    PositiveCharacteristicUnsupported(u64),
    #[error("f is not a root of Q: Q(X, f(X)) has a nonzero coefficient at X^{0}")]
    NotARoot(usize),
}
