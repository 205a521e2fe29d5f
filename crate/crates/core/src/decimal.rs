//! Fixed-precision decimal rendering for exact scalars.
//!
//! Decimals are display-only throughout the crate: every decision is made on
//! exact values. The helpers here scale values by powers of ten into big
//! integers, so the printed digits are correct to the requested precision.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pi::PiRational;
use crate::scalar::Rational;

/// pi scaled by 10^120, digit groups verified against the usual tables.
const PI_DIGITS: &str = concat!(
    "3",
    "1415926535", "8979323846", "2643383279", "5028841971",
    "6939937510", "5820974944", "5923078164", "0628620899",
    "8628034825", "3421170679", "8214808651", "3282306647",
);
const PI_SCALE: u32 = 120;

/// Default precision for verdict displays.
pub const DEFAULT_DECIMAL_DIGITS: u32 = 12;

fn ten_pow(exp: u32) -> BigInt {
    BigInt::from(10u8).pow(exp)
}

/// pi as an exact rational approximation with error below 10^-120.
pub fn pi_approx() -> Rational {
    let digits: BigInt = PI_DIGITS.parse().expect("valid pi digits");
    Rational::new(digits, ten_pow(PI_SCALE))
}

/// Floor of the integer k-th root of a non-negative big integer.
pub fn integer_kth_root(value: &BigInt, k: u32) -> BigInt {
    assert!(k >= 1, "root index must be at least 1");
    assert!(!value.is_negative(), "k-th root of a negative integer");
    if value.is_zero() || k == 1 {
        return value.clone();
    }
    // Newton iteration x -> ((k-1)x + v / x^(k-1)) / k starting above the root.
    let bits = value.bits();
    let mut x = BigInt::from(1u8) << (bits / k as u64 + 1);
    let k_big = BigInt::from(k);
    let k_minus_1 = BigInt::from(k - 1);
    loop {
        let x_pow = x.pow(k - 1);
        let next = (&k_minus_1 * &x + value / &x_pow) / &k_big;
        if next >= x {
            break;
        }
        x = next;
    }
    while x.pow(k) > *value {
        x -= 1;
    }
    x
}

/// `value * 10^digits` rounded half away from zero.
fn scaled_integer(value: &Rational, digits: u32) -> BigInt {
    let scaled_numer = value.numer() * ten_pow(digits);
    let denom = value.denom();
    let twice = BigInt::from(2u8) * &scaled_numer;
    if value.is_negative() {
        (twice - denom) / (BigInt::from(2u8) * denom)
    } else {
        (twice + denom) / (BigInt::from(2u8) * denom)
    }
}

fn render_scaled(scaled: &BigInt, digits: u32) -> String {
    let negative = scaled.is_negative();
    let mut body = scaled.magnitude().to_string();
    let digits = digits as usize;
    if body.len() <= digits {
        body = format!("{}{}", "0".repeat(digits - body.len() + 1), body);
    }
    let split = body.len() - digits;
    let (int_part, frac_part) = body.split_at(split);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Render a rational with exactly `digits` digits after the decimal point.
pub fn rational_decimal(value: &Rational, digits: u32) -> String {
    render_scaled(&scaled_integer(value, digits), digits)
}

/// Rational approximation of `(radicand)^(1/index)` good to `digits` decimals.
pub fn kth_root_approx(radicand: &Rational, index: u32, digits: u32) -> Result<Rational> {
    if radicand.is_negative() {
        return Err(Error::InvalidInput(format!(
            "negative radicand {radicand} for an even or real root"
        )));
    }
    if index == 1 {
        return Ok(radicand.clone());
    }
    // Guard digits keep the floor introduced by integer division invisible.
    let guard = digits + 8;
    let scaled = (radicand.numer() * ten_pow(guard * index)) / radicand.denom();
    let root = integer_kth_root(&scaled, index);
    Ok(Rational::new(root, ten_pow(guard)))
}

/// Render a pi-rational with exactly `digits` digits after the decimal point.
///
/// The pi powers met in practice are tiny (|power| <= 8 or so), keeping the
/// 120-digit pi approximation far more accurate than any display precision.
pub fn pi_rational_decimal(value: &PiRational, digits: u32) -> String {
    let pi = pi_approx();
    let power = value.pi_power();
    let pi_pow = crate::scalar::rational_pow(&pi, power).expect("pi power");
    rational_decimal(&(value.coef() * &pi_pow), digits)
}

/// Approximate a rational as f64 (display and statistics only).
pub fn rational_to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Approximate a pi-rational as f64 (display and statistics only).
pub fn pi_rational_to_f64(value: &PiRational) -> f64 {
    rational_to_f64(value.coef()) * std::f64::consts::PI.powi(value.pi_power())
}
