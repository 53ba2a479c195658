use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not in the weight lattice")]
    NotInWeightLattice(String),
    #[error("partition {partition} violates the {family} parity rule: {detail}")]
    ParityViolation {
        family: String,
        partition: String,
        detail: String,
    },
    #[error("partition sums to {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("unsupported orbit: {0}")]
    UnsupportedOrbit(String),
    #[error("one-parameter subgroup is not generic: root {0} vanishes on nu but not on t_Q")]
    NonGenericNu(String),
    #[error("orbit {0} is not even")]
    NotEvenOrbit(String),
    #[error("enumeration budget of {limit} weights exceeded before the gcd stabilized")]
    BudgetExceeded { limit: u64 },
    #[error("{dim} is not divisible by {divisor}")]
    NotDivisible { dim: String, divisor: String },
    #[error("Weyl product for {0} is not an integer")]
    NonIntegral(String),
    #[error("step {step} failed: {detail}")]
    StepFailed { step: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
