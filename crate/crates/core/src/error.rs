use thiserror::Error;

use crate::codes::DistanceBounds;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("characteristic {0} is larger than the supported bound 65536")]
    PrimeTooLarge(u64),
    #[error("field of order {p}^{m} does not fit the element encoding")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus is reducible over GF(p)")]
    ReducibleModulus,
    #[error("modulus must be monic of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("coefficient {value} out of range for GF({p})")]
    CoefficientOutOfRange { value: u32, p: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("target of an n-th root search must be nonzero")]
    ZeroTarget,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("x^{n} - lambda is not squarefree over characteristic {p} (p divides n)")]
    NotSquarefree { n: usize, p: u32 },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("group order {0} outside supported range 1..=255")]
    OrderOutOfRange(usize),
    #[error("exponents ({i}, {j}) out of range for C_{n}")]
    ExponentOutOfRange { i: usize, j: usize, n: usize },
    #[error("operands belong to different algebras")]
    CtxMismatch,
    #[error("classical involution needs lambda^2 = 1")]
    InvolutionUndefined,
    #[error("witness does not satisfy lambda = a^n beta")]
    InvalidWitness,
    #[error("invalid cocycle table: {0}")]
    InvalidCocycle(&'static str),
    #[error("Galois parameter {k} must be below the extension degree {m}")]
    GaloisOutOfRange { k: u32, m: u32 },
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("code is not constacyclic for the given constant")]
    NotConstacyclic,
    #[error("F_q C_{n} with q a power of {p} is not semisimple (p divides n)")]
    NotSemisimple { n: usize, p: u32 },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("distance budget exhausted: {0}")]
    BudgetExceeded(DistanceBounds),
    #[error("{r} irreducible factors exceed the enumeration limit {limit}")]
    TooManyFactors { r: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("file not found: {0}")]
    MissingFile(String),
    #[error("{0}")]
    Io(String),
}
