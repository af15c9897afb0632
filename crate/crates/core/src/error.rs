use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid automorphism {0}")]
    InvalidAutomorphism(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("group closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("characteristic {p} divides |G| = {order}")]
    CharDividesOrder { p: u64, order: usize },
    #[error("G does not map onto the declared Galois group: image {image:?}, declared {declared:?}")]
    NotSurjectiveOntoGalois { image: Vec<u64>, declared: Vec<u64> },
    #[error("H contains the pseudo-reflection {0}")]
    SmallnessViolation(String),
    #[error("l does not split H: exp(H) = {exponent}; {hint}")]
    SplitFieldTooSmall { exponent: u64, hint: String },
    #[error("non-integral multiplicity {0}")]
    NonIntegralMultiplicity(String),
    #[error("character not constant on orbit {0}")]
    OrbitInconsistent(usize),
    #[error("multiplicity {c} on orbit {orbit} not divisible by a = {a}")]
    NonDivisible { orbit: usize, c: u64, a: u64 },
    #[error("no (a, b) satisfies the constraints on orbit {0}")]
    InconsistentConstraints(usize),
    #[error("valuation on ({0}, {1}) is not integral")]
    ValuationNonIntegral(usize, usize),
    #[error("multiplicities are ambiguous on orbits {0:?}")]
    Ambiguous(Vec<usize>),
    #[error("invalid job: {0}")]
    InvalidJob(String),
    #[error("unknown catalog entry {0}")]
    UnknownEntry(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
