//! Inequality and threshold criteria on Chern numbers of Kähler-Einstein
//! manifolds: the reverse Yau inequality, the bounded-curvature variant, the
//! pinching thresholds, the torus bound, and the small-curvature bounds.
//! Every comparison is decided exactly; decimals are display only.
//!
//! The geometric conclusions attached to a verdict (isometric to projective
//! space, ball quotient, complex torus) assume the caller's global
//! hypotheses (Kähler-Einstein, curvature sign); this module only decides
//! the numeric inequality.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::pi::PiRational;
use crate::scalar::{parse_rational, rat, rational_pow, Rational};
use crate::verdict::{Scalar, Status, Verdict};

pub use crate::radical::{exact_compare, RootExpr};

/// Sign of the Einstein constant asserted by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EinsteinSign {
    Positive,
    Negative,
    Zero,
}

impl std::fmt::Display for EinsteinSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            EinsteinSign::Positive => "positive",
            EinsteinSign::Negative => "negative",
            EinsteinSign::Zero => "zero",
        };
        write!(f, "{text}")
    }
}

/// Chern numbers and curvature bounds of a manifold, as asserted by the
/// caller. `c1n` is the signed c_1^n, `c2c1` the signed c_2 c_1^(n-2).
#[derive(Debug, Clone)]
pub struct ManifoldData {
    pub n: usize,
    pub c1n: Rational,
    pub c2c1: Rational,
    pub h_m: Option<Rational>,
    pub delta: Option<Rational>,
    pub v_mx: Option<PiRational>,
    pub einstein_sign: EinsteinSign,
    /// Amplitude a = max(delta_2 - Ave, Ave + delta_1) for the torus bound.
    /// Taken as a direct input; the bound itself constrains the average that
    /// enters a, and that circularity is left to the caller.
    pub torus_amplitude: Option<Rational>,
}

impl ManifoldData {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidInput("dimension must be at least 2".into()));
        }
        if let Some(h_m) = &self.h_m {
            if !h_m.is_positive() {
                return Err(Error::InvalidInput("H_m must be positive".into()));
            }
        }
        if let Some(delta) = &self.delta {
            if !delta.is_positive() || delta > &Rational::one() {
                return Err(Error::InvalidInput("delta must lie in (0, 1]".into()));
            }
        }
        if let Some(a) = &self.torus_amplitude {
            if !a.is_positive() {
                return Err(Error::InvalidInput("the amplitude a must be positive".into()));
            }
        }
        Ok(())
    }
}

fn ordering_status(ordering: Ordering, satisfied_when: &[Ordering]) -> Status {
    if satisfied_when.contains(&ordering) {
        Status::Satisfied
    } else {
        Status::Violated
    }
}

/// Reverse Yau inequality: with a point of semi-definite holomorphic
/// sectional curvature bounded by H_m in magnitude,
///
///   2(n+1) |c2 c1^(n-2)|
///     <= ((n-1)^(n-2) (n+1)^n (n+2)(n+3) H_m^n / (2^n n^n) + n) |c1^n|.
///
/// A missing H_m defaults to 1, the normalized-metric case.
pub fn reverse_yau(data: &ManifoldData) -> Result<Verdict> {
    data.validate()?;
    if data.c1n.is_zero() {
        return Err(Error::InvalidInput(
            "the reverse Yau inequality needs c1^n != 0".into(),
        ));
    }
    let n = data.n as i64;
    let h_m = data.h_m.clone().unwrap_or_else(Rational::one);
    let lhs = rat(2 * (n + 1), 1) * data.c2c1.abs();
    let factor = rational_pow(&rat(n - 1, 1), data.n as i32 - 2)?
        * rational_pow(&rat(n + 1, 1), data.n as i32)?
        * rat((n + 2) * (n + 3), 1)
        * rational_pow(&h_m, data.n as i32)?
        / (rational_pow(&rat(2, 1), data.n as i32)? * rational_pow(&rat(n, 1), data.n as i32)?);
    let rhs = (factor + rat(n, 1)) * data.c1n.abs();

    let status = ordering_status(lhs.cmp(&rhs), &[Ordering::Less, Ordering::Equal]);
    let conclusion = match status {
        Status::Satisfied => "the reverse Yau inequality holds for these Chern numbers".into(),
        _ => "violated: no Kähler-Einstein metric on such a manifold admits a point of semi-definite holomorphic sectional curvature with this H_m".to_string(),
    };
    Ok(Verdict::new("reverse-yau", lhs, rhs, status, conclusion))
}

/// Bounded-curvature Chern inequality. For n = 2:
/// 6 c2 <= (45 H_m^2 + 2) c1^2; for n >= 3 the right side carries the
/// factor (n-2)^((n-2)/2) / n^(n/2), a single square root when n is odd,
/// and the comparison is decided exactly through the radical.
pub fn ample_bound(data: &ManifoldData) -> Result<Verdict> {
    data.validate()?;
    if data.c1n.is_zero() {
        return Err(Error::InvalidInput(
            "the bounded-curvature inequality needs c1^n != 0".into(),
        ));
    }
    let h_m = data
        .h_m
        .clone()
        .ok_or_else(|| Error::InvalidInput("the bounded-curvature inequality needs H_m".into()))?;
    let n = data.n as i64;

    if data.n == 2 {
        let lhs = rat(6, 1) * data.c2c1.abs();
        let rhs = (rat(45, 1) * &h_m * &h_m + rat(2, 1)) * data.c1n.abs();
        let status = ordering_status(lhs.cmp(&rhs), &[Ordering::Less, Ordering::Equal]);
        let conclusion = conclusion_for_bound(status);
        return Ok(Verdict::new("bounded-curvature", lhs, rhs, status, conclusion));
    }

    let lhs = rat(2 * (n + 1), 1) * data.c2c1.abs();
    let shared = rational_pow(&rat(n + 1, 1), data.n as i32)?
        * rat((n + 2) * (n + 3), 1)
        * rational_pow(&h_m, data.n as i32)?
        / (rational_pow(&rat(2, 1), data.n as i32 - 1)? * rat(n - 1, 1));
    if data.n.is_multiple_of(2) {
        // Even n: (n-2)^((n-2)/2) and n^(n/2) are integers.
        let root_part = rational_pow(&rat(n - 2, 1), (data.n as i32 - 2) / 2)?
            / rational_pow(&rat(n, 1), data.n as i32 / 2)?;
        let rhs = (shared * root_part + rat(n, 1)) * data.c1n.abs();
        let status = ordering_status(lhs.cmp(&rhs), &[Ordering::Less, Ordering::Equal]);
        let conclusion = conclusion_for_bound(status);
        Ok(Verdict::new("bounded-curvature", lhs, rhs, status, conclusion))
    } else {
        // Odd n: the factor is sqrt((n-2)^(n-2) / n^n).
        let radicand = rational_pow(&rat(n - 2, 1), data.n as i32 - 2)?
            / rational_pow(&rat(n, 1), data.n as i32)?;
        let rhs = RootExpr::new(
            rat(n, 1) * data.c1n.abs(),
            shared * data.c1n.abs(),
            radicand,
            2,
        )?;
        let ordering = exact_compare(&lhs, &rhs);
        let status = ordering_status(ordering, &[Ordering::Less, Ordering::Equal]);
        let conclusion = conclusion_for_bound(status);
        Ok(Verdict::new("bounded-curvature", lhs, rhs, status, conclusion))
    }
}

fn conclusion_for_bound(status: Status) -> String {
    match status {
        Status::Satisfied => "the bounded-curvature Chern inequality holds".into(),
        _ => "violated: no point with |H| <= H_m under the Kähler-Einstein hypothesis".into(),
    }
}

/// Pinching threshold 1 - sqrt(2^n (n-1) / (|c1^n| (n+1)^n (n+2)(n+3))).
/// Holomorphic pinching strictly above it forces constant holomorphic
/// sectional curvature. Always strictly below 1.
pub fn pinch_threshold(n: usize, c1n_abs: &Rational) -> Result<RootExpr> {
    if n < 2 {
        return Err(Error::InvalidInput("dimension must be at least 2".into()));
    }
    if !c1n_abs.is_positive() {
        return Err(Error::InvalidInput("|c1^n| must be positive".into()));
    }
    let nn = n as i64;
    let radicand = rational_pow(&rat(2, 1), n as i32)? * rat(nn - 1, 1)
        / (c1n_abs
            * rational_pow(&rat(nn + 1, 1), n as i32)?
            * rat((nn + 2) * (nn + 3), 1));
    RootExpr::new(Rational::one(), -Rational::one(), radicand, 2)
}

/// Verdict for a supplied pinching constant against the threshold; the
/// conclusion depends on the curvature sign (projective space for positive,
/// ball quotient for negative).
pub fn pinch_verdict(
    n: usize,
    c1n_abs: &Rational,
    delta: &Rational,
    sign: EinsteinSign,
) -> Result<Verdict> {
    let threshold = pinch_threshold(n, c1n_abs)?;
    let ordering = exact_compare(delta, &threshold);
    let status = ordering_status(ordering, &[Ordering::Greater]);
    let conclusion = match (status, sign) {
        (Status::Satisfied, EinsteinSign::Positive) => {
            "pinching exceeds the threshold: constant holomorphic sectional curvature, the manifold is holomorphically isometric to complex projective space".into()
        }
        (Status::Satisfied, EinsteinSign::Negative) => {
            "pinching exceeds the threshold: constant holomorphic sectional curvature, the manifold is holomorphically isometric to a ball quotient".into()
        }
        (Status::Satisfied, EinsteinSign::Zero) => {
            "pinching exceeds the threshold: constant holomorphic sectional curvature".into()
        }
        _ => "pinching does not exceed the threshold; no conclusion".to_string(),
    };
    Ok(Verdict::new("pinch-threshold", delta.clone(), threshold, status, conclusion))
}

/// Torus bound. For n > 2 returns the bound B with the test |Ave| < B,
///   B = ((2 pi)^n (n-1) / (a^2 V(M,x) (n+1)^(n-1) (n+3)!))^(1/(n-2));
/// for n = 2 returns the bound on the amplitude itself,
///   a < 2 pi / (3 * 5! * V(M,x))^(1/2).
/// V(M,x) must carry pi^n so the pi powers cancel before root extraction.
pub fn torus_bound(n: usize, v_mx: &PiRational, amplitude: &Rational) -> Result<RootExpr> {
    if n < 2 {
        return Err(Error::InvalidInput("dimension must be at least 2".into()));
    }
    if v_mx.pi_power() != n as i32 {
        return Err(Error::ResidualPiPower(v_mx.to_string(), v_mx.pi_power()));
    }
    if !v_mx.is_positive() {
        return Err(Error::InvalidInput("V(M,x) must be positive".into()));
    }
    if !amplitude.is_positive() {
        return Err(Error::InvalidInput("the amplitude a must be positive".into()));
    }
    let v = v_mx.coef();
    if n == 2 {
        // a < 2 pi / sqrt(3 * 5! * v * pi^2) = sqrt(4 / (360 v)).
        let radicand = rat(4, 360) / v;
        return RootExpr::new(Rational::zero(), Rational::one(), radicand, 2);
    }
    let nn = n as i64;
    let radicand = rational_pow(&rat(2, 1), n as i32)? * rat(nn - 1, 1)
        / (amplitude
            * amplitude
            * v
            * rational_pow(&rat(nn + 1, 1), n as i32 - 1)?
            * Rational::from_integer(crate::scalar::factorial(n as u32 + 3)));
    RootExpr::new(Rational::zero(), Rational::one(), radicand, n as u32 - 2)
}

/// Verdict for the torus criterion. For n = 2 the amplitude is compared
/// against its bound; for n > 2 the average magnitude (when supplied) is
/// compared against B.
pub fn torus_verdict(
    n: usize,
    v_mx: &PiRational,
    amplitude: &Rational,
    ave_abs: Option<&Rational>,
) -> Result<Verdict> {
    let bound = torus_bound(n, v_mx, amplitude)?;
    if n == 2 {
        let ordering = exact_compare(amplitude, &bound);
        let status = ordering_status(ordering, &[Ordering::Less]);
        let conclusion = match status {
            Status::Satisfied => "amplitude below the bound: vanishing average forces a flat metric, the surface is holomorphically isometric to a complex torus".into(),
            _ => "amplitude does not meet the bound; no conclusion".to_string(),
        };
        return Ok(Verdict::new("torus-bound", amplitude.clone(), bound, status, conclusion));
    }
    match ave_abs {
        Some(ave) => {
            let ordering = exact_compare(ave, &bound);
            let status = ordering_status(ordering, &[Ordering::Less]);
            let conclusion = match status {
                Status::Satisfied => {
                    "|Ave| is below the bound, forcing Ave = 0 at the point".into()
                }
                _ => "|Ave| does not meet the bound; no conclusion".to_string(),
            };
            Ok(Verdict::new("torus-bound", ave.clone(), bound, status, conclusion))
        }
        None => Ok(Verdict::new(
            "torus-bound",
            Scalar::Rational(Rational::zero()),
            bound,
            Status::Inconclusive,
            "bound computed; supply |Ave| to decide the comparison",
        )),
    }
}

/// Small-curvature bound
///   2n ((n-1)^2)^(1/n) / ((n+1)(n-1) (|c1^n| (n+2)(n+3))^(1/n)),
/// folded into a single n-th root. Holomorphic sectional curvature pinned
/// strictly between 0 and this bound (or its negative) forces the constant
/// curvature model.
pub fn small_hsc_bound(n: usize, c1n_abs: &Rational) -> Result<RootExpr> {
    if n < 2 {
        return Err(Error::InvalidInput("dimension must be at least 2".into()));
    }
    if !c1n_abs.is_positive() {
        return Err(Error::InvalidInput("|c1^n| must be positive".into()));
    }
    let nn = n as i64;
    let coef = rat(2 * nn, (nn + 1) * (nn - 1));
    let radicand = rat((nn - 1) * (nn - 1), 1)
        / (c1n_abs * rat((nn + 2) * (nn + 3), 1));
    RootExpr::new(Rational::zero(), coef, radicand, n as u32)
}

#[derive(Deserialize)]
struct PiRationalFile {
    coef: String,
    pi_power: i32,
}

#[derive(Deserialize)]
struct ManifoldFile {
    n: usize,
    c1n: String,
    c2c1: String,
    #[serde(default)]
    h_m: Option<String>,
    #[serde(default)]
    delta: Option<String>,
    #[serde(default)]
    v_mx: Option<PiRationalFile>,
    einstein_sign: String,
    #[serde(default)]
    a: Option<String>,
}

/// Parse the manifold-data document: rationals as `"p/q"` strings,
/// `v_mx` as `{"coef": "p/q", "pi_power": n}`, `einstein_sign` one of
/// `"positive" | "negative" | "zero"`, optional `h_m`, `delta`, and torus
/// amplitude `a`.
pub fn manifold_from_json(text: &str) -> Result<ManifoldData> {
    let file: ManifoldFile = serde_json::from_str(text)?;
    let einstein_sign = match file.einstein_sign.as_str() {
        "positive" => EinsteinSign::Positive,
        "negative" => EinsteinSign::Negative,
        "zero" => EinsteinSign::Zero,
        other => {
            return Err(Error::InvalidInput(format!(
                "einstein_sign must be positive, negative, or zero, got {other:?}"
            )))
        }
    };
    let data = ManifoldData {
        n: file.n,
        c1n: parse_rational(&file.c1n)?,
        c2c1: parse_rational(&file.c2c1)?,
        h_m: file.h_m.as_deref().map(parse_rational).transpose()?,
        delta: file.delta.as_deref().map(parse_rational).transpose()?,
        v_mx: file
            .v_mx
            .map(|v| Ok::<_, Error>(PiRational::new(parse_rational(&v.coef)?, v.pi_power)))
            .transpose()?,
        einstein_sign,
        torus_amplitude: file.a.as_deref().map(parse_rational).transpose()?,
    };
    data.validate()?;
    Ok(data)
}

/// Load a manifold-data file from disk.
pub fn load_manifold(path: &std::path::Path) -> Result<ManifoldData> {
    manifold_from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests;
