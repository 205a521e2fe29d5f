//! Exact expressions affine in a single radical, with a decision procedure
//! for comparing them against rationals.
//!
//! Every threshold produced by the pinching and smallness criteria has the
//! shape `base + coef * radicand^(1/index)`. Comparison against a rational
//! isolates the radical and compares index-th powers, so strict inequalities
//! never depend on rounding. Expressions with two independent radicals are
//! not representable here; none of the implemented criteria produce one.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::decimal::{kth_root_approx, rational_decimal};
use crate::error::{Error, Result};
use crate::scalar::{rational_pow, Rational};

/// `base + coef * radicand^(1/index)` with rational parts, radicand >= 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootExpr {
    base: Rational,
    coef: Rational,
    radicand: Rational,
    index: u32,
}

impl RootExpr {
    pub fn new(base: Rational, coef: Rational, radicand: Rational, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidInput("root index must be at least 1".into()));
        }
        if radicand.is_negative() {
            return Err(Error::InvalidInput(format!(
                "negative radicand {radicand} is outside the supported real range"
            )));
        }
        Ok(RootExpr {
            base,
            coef,
            radicand,
            index,
        })
    }

    /// A plain rational viewed as a degenerate radical expression.
    pub fn rational(value: Rational) -> Self {
        RootExpr {
            base: value,
            coef: Rational::zero(),
            radicand: Rational::zero(),
            index: 1,
        }
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn coef(&self) -> &Rational {
        &self.coef
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Exact rational value when the radical part vanishes or is degenerate.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coef.is_zero() || self.radicand.is_zero() {
            return Some(self.base.clone());
        }
        if self.index == 1 {
            return Some(&self.base + &self.coef * &self.radicand);
        }
        None
    }

    /// Exact comparison of this expression with zero.
    pub fn sign(&self) -> Ordering {
        exact_compare(&Rational::zero(), self).reverse()
    }

    /// High-precision decimal rendering (display only).
    pub fn decimal(&self, digits: u32) -> String {
        let root = kth_root_approx(&self.radicand, self.index, digits + 10)
            .expect("radicand is non-negative by construction");
        let value = &self.base + &self.coef * root;
        rational_decimal(&value, digits)
    }

    /// Rational approximation accurate to `digits` decimals (for numeric
    /// cross-checks of the exact comparator).
    pub fn approx(&self, digits: u32) -> Rational {
        let root = kth_root_approx(&self.radicand, self.index, digits + 10)
            .expect("radicand is non-negative by construction");
        &self.base + &self.coef * root
    }
}

impl fmt::Display for RootExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(value) = self.as_rational() {
            return write!(f, "{value}");
        }
        let radical = format!("({})^(1/{})", self.radicand, self.index);
        if self.base.is_zero() {
            if self.coef == Rational::from_integer(1.into()) {
                return write!(f, "{radical}");
            }
            if self.coef == Rational::from_integer((-1).into()) {
                return write!(f, "-{radical}");
            }
            return write!(f, "{}*{radical}", self.coef);
        }
        let coef_abs = self.coef.abs();
        let op = if self.coef.is_negative() { "-" } else { "+" };
        if coef_abs == Rational::from_integer(1.into()) {
            write!(f, "{} {op} {radical}", self.base)
        } else {
            write!(f, "{} {op} {coef_abs}*{radical}", self.base)
        }
    }
}

/// Exact ordering of a rational against a single-radical expression.
///
/// The radical is isolated and both sides are raised to the index-th power;
/// all steps stay in exact rational arithmetic.
pub fn exact_compare(x: &Rational, y: &RootExpr) -> Ordering {
    // x vs base + coef * r^(1/k)  <=>  t vs coef * r^(1/k) with t = x - base.
    let t = x - &y.base;
    if y.coef.is_zero() || y.radicand.is_zero() {
        return t.cmp(&Rational::zero());
    }
    let root_positive = y.radicand.is_positive();
    debug_assert!(root_positive, "radicand is non-negative by construction");
    if y.coef.is_positive() {
        // Right side strictly positive.
        if !t.is_positive() {
            return Ordering::Less;
        }
        let lhs = rational_pow(&t, y.index as i32).expect("positive base");
        let rhs = rational_pow(&y.coef, y.index as i32).expect("positive base") * &y.radicand;
        lhs.cmp(&rhs)
    } else {
        // Right side strictly negative.
        if !t.is_negative() {
            return Ordering::Greater;
        }
        let lhs = rational_pow(&-t, y.index as i32).expect("positive base");
        let rhs = rational_pow(&-y.coef.clone(), y.index as i32).expect("positive base")
            * &y.radicand;
        // Larger magnitude on the negative side means smaller value.
        lhs.cmp(&rhs).reverse()
    }
}
