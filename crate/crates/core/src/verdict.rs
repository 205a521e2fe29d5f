//! Structured verdicts: both sides of a check as exact scalars, an exact
//! status, display decimals, and the geometric conclusion attached to the
//! outcome.

use std::fmt;

use crate::decimal::{pi_rational_decimal, rational_decimal, DEFAULT_DECIMAL_DIGITS};
use crate::pi::PiRational;
use crate::radical::RootExpr;
use crate::scalar::Rational;

/// Outcome of an exact comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Satisfied,
    Violated,
    /// The check could not be decided from the supplied data (for example a
    /// bound was computed but the quantity it constrains was not provided).
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Status::Satisfied => "satisfied",
            Status::Violated => "violated",
            Status::Inconclusive => "inconclusive",
        };
        write!(f, "{text}")
    }
}

/// An exact scalar: rational, rational times a pi power, or a radical
/// expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Pi(PiRational),
    Root(RootExpr),
}

impl Scalar {
    pub fn decimal(&self, digits: u32) -> String {
        match self {
            Scalar::Rational(r) => rational_decimal(r, digits),
            Scalar::Pi(p) => pi_rational_decimal(p, digits),
            Scalar::Root(r) => r.decimal(digits),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Pi(p) => write!(f, "{p}"),
            Scalar::Root(r) => write!(f, "{r}"),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(value: Rational) -> Self {
        Scalar::Rational(value)
    }
}

impl From<PiRational> for Scalar {
    fn from(value: PiRational) -> Self {
        Scalar::Pi(value)
    }
}

impl From<RootExpr> for Scalar {
    fn from(value: RootExpr) -> Self {
        Scalar::Root(value)
    }
}

/// Report emitted by every criterion and cover check: the two exact sides,
/// the decided status, display decimals, and the attached conclusion.
///
/// The status is always determined by exact comparison; the decimal strings
/// are for display only. `details` carries named auxiliary quantities
/// (implied volumes and the like).
#[derive(Debug, Clone)]
pub struct Verdict {
    pub criterion: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub status: Status,
    pub lhs_decimal: String,
    pub rhs_decimal: String,
    pub conclusion: String,
    pub details: Vec<(String, Scalar)>,
}

impl Verdict {
    pub fn new(
        criterion: impl Into<String>,
        lhs: impl Into<Scalar>,
        rhs: impl Into<Scalar>,
        status: Status,
        conclusion: impl Into<String>,
    ) -> Self {
        let lhs = lhs.into();
        let rhs = rhs.into();
        Verdict {
            criterion: criterion.into(),
            lhs_decimal: lhs.decimal(DEFAULT_DECIMAL_DIGITS),
            rhs_decimal: rhs.decimal(DEFAULT_DECIMAL_DIGITS),
            lhs,
            rhs,
            status,
            conclusion: conclusion.into(),
            details: Vec::new(),
        }
    }

    pub fn with_detail(mut self, name: impl Into<String>, value: impl Into<Scalar>) -> Self {
        self.details.push((name.into(), value.into()));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Satisfied
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: lhs = {}, rhs = {}, status = {}",
            self.criterion, self.lhs, self.rhs, self.status
        )
    }
}
