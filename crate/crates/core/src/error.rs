//! Crate-wide error type. Every fallible operation returns [`Result`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("double factorial is undefined for {0}; the domain is m >= -1")]
    DoubleFactorialDomain(i64),

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("exact sphere volume needs an even number of ambient variables, got {0}")]
    OddSphereDimension(usize),

    #[error("cannot add pi-rationals with different pi powers ({left} vs {right})")]
    PiPowerMismatch { left: i32, right: i32 },

    #[error("value {0} carries pi^{1}, expected a plain rational")]
    ResidualPiPower(String, i32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("index {index} is out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("conflicting values on the symmetry orbit of ({i}, {j}, {k}, {l}): {first} vs {second}")]
    OrbitConflict {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        first: String,
        second: String,
    },

    #[error("tensor is not Einstein: Ricci({i}, {j}) = {entry} but the (1, 1) entry is {reference}")]
    NotEinstein {
        i: usize,
        j: usize,
        entry: String,
        reference: String,
    },

    #[error("operation needs a nonzero Einstein constant")]
    ZeroEinsteinConstant,

    #[error("imaginary part of the sectional-curvature expansion did not cancel; tensor violates the required symmetries")]
    SymmetryViolation,

    #[error("wedge expansion is limited to dimension <= {limit}, got {n}")]
    BruteForceLimit { n: usize, limit: usize },

    #[error("density cross-check failed: expansion route gave {expansion}, closed route gave {closed}")]
    DensityMismatch { expansion: String, closed: String },

    #[error("chern exponent pattern has weight {got}, expected {expected}")]
    PatternWeight { expected: u32, got: u32 },

    #[error("ramification profile is inconsistent: sheet count {sheets} does not match covering multiplicity {multiplicity}")]
    RamificationInconsistent { sheets: u32, multiplicity: u32 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed document at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
