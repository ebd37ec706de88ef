use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("mismatched moduli: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("not invertible")]
    NotInvertible,
    #[error("invalid root system type {0}{1}")]
    InvalidType(char, usize),
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("enumeration cap {cap} exceeded after {partial} elements")]
    CapExceeded { cap: usize, partial: usize },
    #[error("element outside domain group")]
    OutsideDomain,
    #[error("automorphism check failed: {0}")]
    NotAutomorphism(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("subgroup not invariant")]
    SubgroupNotInvariant,
    #[error("subgroup not normal")]
    NotNormal,
    #[error("degenerate torus element")]
    DegenerateTorus,
    #[error("field too small")]
    FieldTooSmall,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
