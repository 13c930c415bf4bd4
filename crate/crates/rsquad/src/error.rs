use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdBothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have a nonzero constant term")]
    ConstantTermZero,
    #[error("extension degree {0} out of range 1..={1}")]
    DegreeCap(usize, usize),
    #[error("variable count {0} exceeds cap {1}")]
    VariableCap(usize, usize),
    #[error("n must be at least 1")]
    InvalidN,
    #[error("offsets must be nonempty, strictly ascending and positive")]
    InvalidOffsets,
    #[error(
        "offset {offset} reduces to {reduced} mod {n}, outside 1..={half} required by ANF semantics"
    )]
    OffsetOutOfRange {
        offset: u32,
        reduced: u32,
        n: usize,
        half: usize,
    },
    #[error("matrix dimension {0} exceeds cap {1}")]
    MatrixCap(usize, usize),
    #[error("rules matrix parameter t={0} out of range 1..={1}")]
    RulesCap(u32, u32),
    #[error("no linear recurrence found in the supplied data (max testable order {0})")]
    NoRecurrence(usize),
    #[error("fitted recurrence has non-integer coefficients")]
    NonIntegerRecurrence,
    #[error("backward extension step {0} is not integral")]
    NonIntegralBackwardStep(usize),
    #[error("seed length {0} does not match recurrence order {1}")]
    SeedLength(usize, usize),
    #[error("class count for n={n}: expected {expected}, found {found}")]
    ClassCountMismatch {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal cross-check failed. This signals a bug in the
    /// implementation (or a genuine counterexample) and maps to exit code 2
    /// in the CLI.
    #[error("internal consistency check failed: {0}")]
    Falsified(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
