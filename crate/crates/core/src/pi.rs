//! Rationals carrying an explicit power of pi.
//!
//! Sphere volumes and the moment integrals built on them are always a
//! rational number times an integer power of pi, so pi is kept symbolic and
//! every identity in the crate is decided by exact equality. Addition of two
//! nonzero values with different pi powers has no representation here and is
//! rejected; all the identities we evaluate are pi-homogeneous.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rational_pow, Rational};

/// `coef * pi^pi_power`, canonicalized so that zero always has `pi_power == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRational {
    coef: Rational,
    pi_power: i32,
}

impl PiRational {
    pub fn new(coef: Rational, pi_power: i32) -> Self {
        if coef.is_zero() {
            PiRational { coef, pi_power: 0 }
        } else {
            PiRational { coef, pi_power }
        }
    }

    pub fn zero() -> Self {
        PiRational::new(Rational::zero(), 0)
    }

    pub fn from_rational(coef: Rational) -> Self {
        PiRational::new(coef, 0)
    }

    pub fn coef(&self) -> &Rational {
        &self.coef
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coef.is_positive()
    }

    /// Exact sum; errors when both sides are nonzero with different pi powers.
    pub fn try_add(&self, other: &PiRational) -> Result<PiRational> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_power != other.pi_power {
            return Err(Error::PiPowerMismatch {
                left: self.pi_power,
                right: other.pi_power,
            });
        }
        Ok(PiRational::new(&self.coef + &other.coef, self.pi_power))
    }

    pub fn try_sub(&self, other: &PiRational) -> Result<PiRational> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> PiRational {
        PiRational::new(-self.coef.clone(), self.pi_power)
    }

    pub fn mul(&self, other: &PiRational) -> PiRational {
        PiRational::new(&self.coef * &other.coef, self.pi_power + other.pi_power)
    }

    pub fn scale(&self, factor: &Rational) -> PiRational {
        PiRational::new(&self.coef * factor, self.pi_power)
    }

    pub fn div(&self, other: &PiRational) -> Result<PiRational> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(PiRational::new(
            &self.coef / &other.coef,
            self.pi_power - other.pi_power,
        ))
    }

    pub fn pow(&self, exp: i32) -> Result<PiRational> {
        Ok(PiRational::new(
            rational_pow(&self.coef, exp)?,
            self.pi_power
                .checked_mul(exp)
                .expect("pi power overflow"),
        ))
    }

    /// Extract the plain rational value, rejecting any residual pi power.
    pub fn into_rational(self) -> Result<Rational> {
        if self.pi_power != 0 {
            return Err(Error::ResidualPiPower(self.to_string(), self.pi_power));
        }
        Ok(self.coef)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coef),
            1 => write!(f, "{} * pi", self.coef),
            p => write!(f, "{} * pi^{}", self.coef, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn zero_is_canonical() {
        let z = PiRational::new(Rational::zero(), 7);
        assert_eq!(z.pi_power(), 0);
        assert!(z.is_zero());
        assert_eq!(z, PiRational::zero());
    }

    #[test]
    fn mismatched_powers_reject_addition() {
        let a = PiRational::new(rat_int(1), 1);
        let b = PiRational::new(rat_int(1), 2);
        assert!(matches!(
            a.try_add(&b),
            Err(Error::PiPowerMismatch { left: 1, right: 2 })
        ));
        // Zero is addable to anything.
        assert_eq!(PiRational::zero().try_add(&b).unwrap(), b);
    }

    #[test]
    fn arithmetic() {
        let a = PiRational::new(rat(3, 2), 2);
        let b = PiRational::new(rat(1, 2), 2);
        assert_eq!(a.try_add(&b).unwrap(), PiRational::new(rat_int(2), 2));
        assert_eq!(a.try_sub(&b).unwrap(), PiRational::new(rat_int(1), 2));
        assert_eq!(a.mul(&b), PiRational::new(rat(3, 4), 4));
        assert_eq!(a.div(&b).unwrap(), PiRational::from_rational(rat_int(3)));
        assert_eq!(a.pow(2).unwrap(), PiRational::new(rat(9, 4), 4));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PiRational::new(rat_int(2), 1).to_string(), "2 * pi");
        assert_eq!(PiRational::new(rat(1, 2), 3).to_string(), "1/2 * pi^3");
        assert_eq!(PiRational::from_rational(rat_int(5)).to_string(), "5");
        assert_eq!(PiRational::zero().to_string(), "0");
    }

    #[test]
    fn residual_pi_power_is_rejected() {
        let v = PiRational::new(rat_int(1), 1);
        assert!(v.into_rational().is_err());
        let w = PiRational::new(rat(7, 3), 0);
        assert_eq!(w.into_rational().unwrap(), rat(7, 3));
    }
}
