//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by table construction, field arithmetic and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {0} outside the supported range 1..=16")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {degree}")]
    InvalidModulus { modulus: u32, degree: u32 },
    #[error("dimensions n={n}, m={m} unsupported (need n, m >= 1 and n + m <= 28)")]
    DimensionOutOfRange { n: u32, m: u32 },
    #[error("expected {expected} table entries, got {got}")]
    WrongTableLength { expected: usize, got: usize },
    #[error("table length {0} is not a power of two")]
    LengthNotPowerOfTwo(usize),
    #[error("table entry {value} does not fit in {m} output bits")]
    EntryOutOfRange { value: u64, m: u32 },
    #[error("malformed table token `{0}`")]
    MalformedToken(String),
    #[error("trace convention needs m = n = field degree (n={n}, m={m}, field degree {field})")]
    TraceDimensionMismatch { n: u32, m: u32, field: u32 },
    #[error("function is not a permutation")]
    NotAPermutation,
    #[error("2-D transform entry {0} not divisible by {1}")]
    NonIntegralTransform(i64, i64),
    #[error("component {v} is not plateaued")]
    NotPlateaued { v: u32 },
    #[error("function is not APN")]
    NotApn,
    #[error("direction u must be nonzero")]
    ZeroDirection,
    #[error("function has algebraic degree {got}, expected {expected}")]
    WrongAlgebraicDegree { expected: u32, got: u32 },
    #[error("divisibility analysis needs n > 2 and degree >= 2 (n={n}, degree={degree})")]
    DivisibilityPrecondition { n: u32, degree: u32 },
    #[error("indicator bound needs m >= n (n={n}, m={m})")]
    BoundNeedsWideOutput { n: u32, m: u32 },
    #[error("affine map dimension mismatch: {0}")]
    MapDimensionMismatch(String),
    #[error("matrix is singular over F2")]
    SingularMatrix,
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(String),
    #[error("exponent {exponent} is not invertible modulo {modulus}")]
    ExponentNotInvertible { exponent: u64, modulus: u64 },
    #[error("derivative image is not a hyperplane complement at u={u}")]
    NotCrooked { u: u32 },
    #[error("catalog index {0} out of range 0..=15")]
    CatalogIndexOutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
