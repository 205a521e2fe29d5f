//! Integer partitions, conjugacy-class sizes in symmetric groups, and the
//! power-sum expansion of the product x_1 ... x_n.
//!
//! A partition doubles as a cycle type: distinct part values m_i with
//! multiplicities k_i satisfy sum k_i m_i = n, the class of permutations of
//! that cycle type has n! / prod(k_i! m_i^k_i) elements, and
//!
//!   x_1 ... x_n = sum over |lambda| = n of
//!                 (-1)^(n + len(lambda)) / prod(k_i! m_i^k_i) * p_lambda
//!
//! with p_lambda the corresponding power-sum product.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{factorial, Rational};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |lambda| = sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// l(lambda), the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Distinct part values with multiplicities: pairs (m_i, k_i).
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &part in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == part => *count += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }

    /// z_lambda = prod_i k_i! m_i^k_i, the centralizer order of the cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (value, count) in self.multiplicities() {
            acc *= factorial(count);
            acc *= BigInt::from(value).pow(count);
        }
        acc
    }

    /// Number of permutations in S_n with this cycle type: n! / z_lambda.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.centralizer_order()
    }
}

/// Order matching the enumeration: (n) first, (1, ..., 1) last.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.parts.iter().zip(&other.parts) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                non_equal => return non_equal,
            }
        }
        self.parts.len().cmp(&other.parts.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of n, each exactly once, in reverse-lexicographic order:
/// (n), (n-1, 1), ..., (1, ..., 1).
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn extend(remaining: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let largest = remaining.min(cap);
        for part in (1..=largest).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Coefficients c_lambda with x_1 ... x_n = sum c_lambda p_lambda, where
/// c_lambda = (-1)^(n + len(lambda)) / z_lambda.
pub fn power_sum_expansion(n: u32) -> BTreeMap<Partition, Rational> {
    let mut out = BTreeMap::new();
    for partition in enumerate_partitions(n) {
        let sign = if (n as usize + partition.length()).is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let coef = Rational::new(sign, partition.centralizer_order());
        out.insert(partition, coef);
    }
    out
}

/// The scalar identity obtained from the expansion at x_j = 1 for all j:
/// sum over |lambda| = n of (-1)^(n + len) n^len / z_lambda. Always 1.
pub fn power_sum_identity_at_one(n: u32) -> Rational {
    let mut acc = Rational::from_integer(BigInt::from(0));
    for (partition, coef) in power_sum_expansion(n) {
        let n_pow = BigInt::from(n).pow(partition.length() as u32);
        acc += coef * Rational::from_integer(n_pow);
    }
    acc
}
