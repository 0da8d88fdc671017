use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    DimensionMismatch { left: usize, right: usize },

    #[error("generator is not homogeneous: {0}")]
    NonHomogeneousGenerator(String),

    #[error("too many variables for exhaustive search: {nvars} > {max}")]
    TooLarge { nvars: usize, max: usize },

    #[error("the unit ideal has no minimal primes")]
    UnitIdeal,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("negative coefficient {coeff} at q^{i} t^{j}")]
    NegativeCoefficient { i: u32, j: u32, coeff: String },

    #[error("the q^0 part of a Poincare series must be exactly 1, got {0}")]
    BadDegreeZeroPart(String),

    #[error("truncation degree {got} too small, need at least {need}")]
    TruncationTooSmall { need: usize, got: usize },

    #[error("series tail does not vanish: coefficient {coeff} at degree {degree}")]
    NonVanishingTail { degree: usize, coeff: String },

    #[error("quotient is not Artinian within degree {0}")]
    NotArtinianWithinCap(usize),

    #[error("partition {0} is not a hook; closed forms require a hook")]
    NotAHook(String),
}

pub type Result<T> = std::result::Result<T, Error>;
