//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over arbitrary-precision rationals.
//! `num_rational::BigRational` already guarantees the invariants we need
//! (lowest terms, positive denominator, total exact arithmetic), so it is
//! re-exported as [`Rational`] together with a handful of constructors and
//! parsing/formatting helpers used across the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Rational `numer/denom`. Panics on a zero denominator; intended for
/// literals in code and tests, not for user input (see [`parse_rational`]).
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Integer power with a signed exponent; `base^exp` as an exact rational.
pub fn rational_pow(base: &Rational, exp: i32) -> Result<Rational> {
    if exp == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() && exp < 0 {
        return Err(Error::DivisionByZero);
    }
    let mag = exp.unsigned_abs();
    let powed = Rational::new(base.numer().pow(mag), base.denom().pow(mag));
    if exp < 0 {
        Ok(powed.recip())
    } else {
        Ok(powed)
    }
}

/// Parse `p`, `-p`, or `p/q` into a rational, rejecting zero denominators.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let bad = |message: &str| Error::InvalidInput(format!("{message}: {text:?}"));
    if trimmed.is_empty() {
        return Err(bad("empty rational"));
    }
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let numer: BigInt = numer_text
        .parse()
        .map_err(|_| bad("malformed numerator"))?;
    let denom: BigInt = match denom_text {
        Some(d) => d.parse().map_err(|_| bad("malformed denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

/// `p/q` (or plain `p` for integers); the canonical textual form.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// True when the value is a (not necessarily positive) integer.
pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

/// True for integers >= 1.
pub fn is_positive_integer(value: &Rational) -> bool {
    is_integer(value) && value.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -10/5 ").unwrap(), rat_int(-2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(matches!(
            parse_rational("1/0"),
            Err(Error::DivisionByZero)
        ));
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let r = parse_rational("4/-6").unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn signed_powers() {
        assert_eq!(rational_pow(&rat(2, 3), 3).unwrap(), rat(8, 27));
        assert_eq!(rational_pow(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert_eq!(rational_pow(&rat_int(0), 0).unwrap(), rat_int(1));
        assert!(rational_pow(&rat_int(0), -1).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(20), "2432902008176640000".parse::<BigInt>().unwrap());
    }
}
