use thiserror::Error;

/// Library result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library operations.
///
/// Numerical-failure variants (`NonIntegralCount`, `ImaginaryResidue`) mean a
/// float invariant was violated beyond its budget; results are never silently
/// rounded past those checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {n}")]
    ModulusTooSmall { n: u64 },

    #[error("Z_{n}[i] is not a field: the modulus must be a prime ≡ 3 (mod 4)")]
    NotAField { n: u64 },

    #[error("the divisor/Gauss-sum count formula is restricted to odd moduli, got n = {n}; use the exhaustive count for even n")]
    EvenModulus { n: u64 },

    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    #[error("count overflows u64 for p = {p}, r = {r}")]
    CountOverflow { p: u64, r: u32 },

    #[error("{task}: size {size} exceeds the budget {limit}")]
    ResourceLimit {
        task: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("count evaluation did not converge to an integer: re = {re}, im = {im} (tolerance {tol})")]
    NonIntegralCount { re: f64, im: f64, tol: f64 },

    #[error("imaginary residue {value} of a symmetric character sum exceeds the budget {limit}")]
    ImaginaryResidue { value: f64, limit: f64 },

    #[error("closed form for S({m}, {n}) requires odd n with gcd(m, n) = 1")]
    ClosedFormDomain { m: u64, n: u64 },

    #[error("spectrum is incomplete: multiplicities sum to {found}, expected {expected}")]
    IncompleteSpectrum { expected: u64, found: u64 },

    #[error("mismatched moduli: {left} vs {right}")]
    MismatchedModuli { left: u64, right: u64 },

    #[error("connection set of Z_{n}[i] is empty")]
    EmptyConnectionSet { n: u64 },

    #[error("connection set is invalid: {reason}")]
    InvalidConnectionSet { reason: String },
}
