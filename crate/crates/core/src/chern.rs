//! Pointwise Chern-form densities from a curvature tensor.
//!
//! The curvature matrix entries are (1,1)-forms; top-degree wedge products
//! of n of them are expanded by brute force over pairs of permutations
//! placing the dz and dzbar factors, with the exact sign obtained by
//! reordering into the reference volume element
//! dv = dz_1 ^ dzbar_1 ^ ... ^ dz_n ^ dzbar_n.
//!
//! Densities are reported in the (i/2pi)^n * d * dv convention, which makes
//! every identity here pi-free and exact. The diagonal and mixed wedge sums
//! are compared against their closed forms in the trace invariants, and the
//! combination entering the Chern-number identity is evaluated through both
//! routes with an internal consistency error if they ever disagree.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::curvature::KahlerCurvature;
use crate::error::{Error, Result};
use crate::pi::PiRational;
use crate::polysphere::sphere_volume;
use crate::scalar::{factorial, rat, rational_pow, Rational};
use crate::verdict::{Status, Verdict};

/// Default cap for the brute-force expansion; (n!)^2 permutation pairs per
/// index tuple grow fast beyond this.
pub const DEFAULT_WEDGE_LIMIT: usize = 5;

/// A (1,1)-form sum a_(k lbar) dz_k ^ dzbar_l with rational coefficients,
/// indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    n: usize,
    coeffs: BTreeMap<(u8, u8), Rational>,
}

impl TwoForm {
    pub fn zero(n: usize) -> Self {
        TwoForm {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, k: usize, l: usize, value: Rational) {
        debug_assert!(k < self.n && l < self.n);
        if value.is_zero() {
            self.coeffs.remove(&(k as u8, l as u8));
        } else {
            self.coeffs.insert((k as u8, l as u8), value);
        }
    }

    pub fn get(&self, k: usize, l: usize) -> Rational {
        self.coeffs
            .get(&(k as u8, l as u8))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u8, u8), &Rational)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (&(k, l), value) in &other.coeffs {
            let updated = out.get(k as usize, l as usize) + value;
            out.set(k as usize, l as usize, updated);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> TwoForm {
        if factor.is_zero() {
            return TwoForm::zero(self.n);
        }
        TwoForm {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(key, value)| (*key, value * factor))
                .collect(),
        }
    }
}

/// Curvature matrix in the unitary-normal frame:
/// (Theta_a^b)_(k lbar) = R_(a bbar k lbar).
pub fn curvature_matrix(tensor: &KahlerCurvature) -> Vec<Vec<TwoForm>> {
    let n = tensor.dimension();
    let mut matrix = vec![vec![TwoForm::zero(n); n]; n];
    for (alpha, row) in matrix.iter_mut().enumerate() {
        for (beta, form) in row.iter_mut().enumerate() {
            for k in 0..n {
                for l in 0..n {
                    form.set(k, l, tensor.get(alpha, beta, k, l));
                }
            }
        }
    }
    matrix
}

/// Sign of reordering dz_(k_1) ^ dzbar_(l_1) ^ ... ^ dz_(k_n) ^ dzbar_(l_n)
/// into dv, as the parity of inversions among the 2n degree-one factors.
fn interleave_sign(picks: &[(u8, u8)]) -> i8 {
    let mut slots = Vec::with_capacity(picks.len() * 2);
    for &(k, l) in picks {
        slots.push(2 * k);
        slots.push(2 * l + 1);
    }
    let mut inversions = 0usize;
    for a in 0..slots.len() {
        for b in a + 1..slots.len() {
            if slots[a] > slots[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The dv coefficient of form_1 ^ ... ^ form_n: the full expansion over all
/// placements (tau, rho) of the dz and dzbar factors, each weighted by the
/// exact reordering sign.
pub fn wedge_top_density(forms: &[&TwoForm]) -> Rational {
    let n = forms.len();
    debug_assert!(forms.iter().all(|f| f.dimension() == n));
    let mut acc = Rational::zero();
    let mut picks: Vec<(u8, u8)> = Vec::with_capacity(n);

    fn descend(
        forms: &[&TwoForm],
        level: usize,
        used_z: u32,
        used_zbar: u32,
        partial: &Rational,
        picks: &mut Vec<(u8, u8)>,
        acc: &mut Rational,
    ) {
        if level == forms.len() {
            let sign = interleave_sign(picks);
            if sign > 0 {
                *acc += partial;
            } else {
                *acc -= partial;
            }
            return;
        }
        for (&(k, l), value) in forms[level].entries() {
            if used_z & (1 << k) != 0 || used_zbar & (1 << l) != 0 {
                continue;
            }
            picks.push((k, l));
            let next = partial * value;
            descend(
                forms,
                level + 1,
                used_z | (1 << k),
                used_zbar | (1 << l),
                &next,
                picks,
                acc,
            );
            picks.pop();
        }
    }

    descend(forms, 0, 0, 0, &Rational::one(), &mut picks, &mut acc);
    acc
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::BruteForceLimit { n, limit });
    }
    Ok(())
}

/// Odometer over index tuples (a_1, ..., a_n) in 0..n.
fn for_each_tuple(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut tuple = vec![0usize; n];
    loop {
        visit(&tuple);
        let mut pos = 0;
        loop {
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
            if pos == n {
                return;
            }
        }
    }
}

/// dv coefficient of sum over (a_1..a_n) of Theta_(a_1)^(a_1) ^ ... ^
/// Theta_(a_n)^(a_n), by full expansion.
pub fn diag_wedge_density(tensor: &KahlerCurvature) -> Result<Rational> {
    diag_wedge_density_with_limit(tensor, DEFAULT_WEDGE_LIMIT)
}

pub fn diag_wedge_density_with_limit(
    tensor: &KahlerCurvature,
    limit: usize,
) -> Result<Rational> {
    let n = tensor.dimension();
    check_limit(n, limit)?;
    let matrix = curvature_matrix(tensor);
    let mut total = Rational::zero();
    for_each_tuple(n, |tuple| {
        if tuple.iter().any(|&a| matrix[a][a].is_zero()) {
            return;
        }
        let forms: Vec<&TwoForm> = tuple.iter().map(|&a| &matrix[a][a]).collect();
        total += wedge_top_density(&forms);
    });
    Ok(total)
}

/// dv coefficient of sum over (a_1..a_n) of
/// Theta_(a_1)^(a_1) ^ ... ^ Theta_(a_(n-2))^(a_(n-2)) ^
/// Theta_(a_(n-1))^(a_n) ^ Theta_(a_n)^(a_(n-1)), by full expansion.
pub fn mixed_wedge_density(tensor: &KahlerCurvature) -> Result<Rational> {
    mixed_wedge_density_with_limit(tensor, DEFAULT_WEDGE_LIMIT)
}

pub fn mixed_wedge_density_with_limit(
    tensor: &KahlerCurvature,
    limit: usize,
) -> Result<Rational> {
    let n = tensor.dimension();
    if n < 2 {
        return Err(Error::InvalidInput(
            "mixed wedge density needs dimension >= 2".into(),
        ));
    }
    check_limit(n, limit)?;
    let matrix = curvature_matrix(tensor);
    let mut total = Rational::zero();
    for_each_tuple(n, |tuple| {
        let mut forms: Vec<&TwoForm> = Vec::with_capacity(n);
        for &a in &tuple[..n - 2] {
            forms.push(&matrix[a][a]);
        }
        forms.push(&matrix[tuple[n - 2]][tuple[n - 1]]);
        forms.push(&matrix[tuple[n - 1]][tuple[n - 2]]);
        if forms.iter().any(|f| f.is_zero()) {
            return;
        }
        total += wedge_top_density(&forms);
    });
    Ok(total)
}

/// Closed form of the diagonal wedge sum for Einstein tensors:
/// (n-1)! / n^(n-1) * R1^(n).
pub fn diag_closed_form(tensor: &KahlerCurvature) -> Result<Rational> {
    let n = tensor.dimension();
    let r1 = tensor.invariant_r1(n as u32)?;
    let coefficient = Rational::new(
        factorial(n as u32 - 1),
        num_bigint::BigInt::from(n as i64).pow(n as u32 - 1),
    );
    Ok(coefficient * r1)
}

/// Closed form of the mixed wedge sum for Einstein tensors:
/// (n-2)!/n^(n-1) * R1^(n) - (n-2)!/n^(n-2) * R2^(n).
pub fn mixed_closed_form(tensor: &KahlerCurvature) -> Result<Rational> {
    let n = tensor.dimension();
    if n < 2 {
        return Err(Error::InvalidInput(
            "mixed closed form needs dimension >= 2".into(),
        ));
    }
    let r1 = tensor.invariant_r1(n as u32)?;
    let r2 = tensor.invariant_r2(n as u32)?;
    let base = num_bigint::BigInt::from(n as i64);
    let first = Rational::new(factorial(n as u32 - 2), base.pow(n as u32 - 1)) * r1;
    let second = Rational::new(factorial(n as u32 - 2), base.pow(n as u32 - 2)) * r2;
    Ok(first - second)
}

/// Closed form of the density of c1^n - (2(n+1)/n) c1^(n-2) c2:
/// ((n-2)! / n^n) (2 R1^(n) - n(n+1) R2^(n)).
pub fn combo_closed_form(tensor: &KahlerCurvature) -> Result<Rational> {
    let n = tensor.dimension();
    if n < 2 {
        return Err(Error::InvalidInput(
            "combination density needs dimension >= 2".into(),
        ));
    }
    let nn = n as i64;
    let r1 = tensor.invariant_r1(n as u32)?;
    let r2 = tensor.invariant_r2(n as u32)?;
    let bracket = rat(2, 1) * r1 - rat(nn * (nn + 1), 1) * r2;
    Ok(Rational::new(
        factorial(n as u32 - 2),
        num_bigint::BigInt::from(nn).pow(n as u32),
    ) * bracket)
}

/// Density of c1^n(Theta) - (2(n+1)/n) c1^(n-2) c2(Theta) for an Einstein
/// tensor, computed two ways: (a) from the diagonal and mixed wedge
/// expansions via -(1/n) diag + ((n+1)/n) mixed, and (b) the closed form.
/// Returns (b); a mismatch between the routes is an internal error.
pub fn combo_density(tensor: &KahlerCurvature) -> Result<Rational> {
    combo_density_with_limit(tensor, DEFAULT_WEDGE_LIMIT)
}

pub fn combo_density_with_limit(tensor: &KahlerCurvature, limit: usize) -> Result<Rational> {
    let n = tensor.dimension();
    tensor.einstein_mu()?;
    let diag = diag_wedge_density_with_limit(tensor, limit)?;
    let mixed = mixed_wedge_density_with_limit(tensor, limit)?;
    let nn = n as i64;
    let expansion = rat(-1, nn) * diag + rat(nn + 1, nn) * mixed;
    let closed = combo_closed_form(tensor)?;
    if expansion != closed {
        return Err(Error::DensityMismatch {
            expansion: expansion.to_string(),
            closed: closed.to_string(),
        });
    }
    Ok(closed)
}

/// Densities of the two Chern monomials in the
/// (i/2pi)^n * d * dv convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    /// dv density of c1^n.
    pub c1n_density: Rational,
    /// dv density of c1^(n-2) c2.
    pub c1c2_density: Rational,
    /// The density convention in force.
    pub convention: &'static str,
}

pub const DENSITY_CONVENTION: &str =
    "form = (i/2pi)^n * d * dv with dv = dz1^dzbar1^...^dzn^dzbarn";

/// Both Chern-monomial densities for an Einstein tensor; c1^(n-2) c2 is
/// recovered from the diagonal and combination densities.
pub fn density_report(tensor: &KahlerCurvature) -> Result<DensityReport> {
    let n = tensor.dimension() as i64;
    let diag = diag_wedge_density(tensor)?;
    let combo = combo_density(tensor)?;
    let c1c2 = rat(n, 2 * (n + 1)) * (&diag - &combo);
    Ok(DensityReport {
        c1n_density: diag,
        c1c2_density: c1c2,
        convention: DENSITY_CONVENTION,
    })
}

/// Two-sided pointwise check of the Chern-number identity: the density of
/// -c1^n + (2(n+1)/n) c2 c1^(n-2) must equal
/// ((n+1)^(n-1) (n+3)! / (2^n n (n-1) V)) times the weighted variance
/// integral of the holomorphic sectional curvature. Both sides are exact
/// rationals after the pi powers cancel.
pub fn variance_identity_check(tensor: &KahlerCurvature) -> Result<Verdict> {
    let n = tensor.dimension();
    if n < 2 {
        return Err(Error::InvalidInput(
            "the identity needs complex dimension >= 2".into(),
        ));
    }
    let mu = tensor.einstein_mu()?;
    if mu.is_zero() {
        return Err(Error::ZeroEinsteinConstant);
    }
    let lhs = -combo_density(tensor)?;

    let variance = tensor.weighted_variance_integral()?;
    let volume = sphere_volume(2 * n)?;
    let nn = n as i64;
    let coefficient = rational_pow(&rat(nn + 1, 1), n as i32 - 1)?
        * Rational::from_integer(factorial(n as u32 + 3))
        / (rational_pow(&rat(2, 1), n as i32)? * rat(nn * (nn - 1), 1));
    let rhs = variance.div(&volume)?.into_rational()? * coefficient;

    let status = if lhs == rhs {
        Status::Satisfied
    } else {
        Status::Violated
    };
    let conclusion = match status {
        Status::Satisfied => "the Chern-density combination equals the weighted variance of the holomorphic sectional curvature at this point".to_string(),
        _ => "identity check failed; the tensor or the implementation violates the density identity".to_string(),
    };
    Ok(Verdict::new(
        "chern-variance-identity",
        lhs,
        rhs,
        status,
        conclusion,
    ))
}

/// Consistency probe tying a claimed c1^n to the pointwise data: the
/// diagonal wedge density of an Einstein tensor must equal n! mu^n, and the
/// normalized volume implied by the claim through
/// V(M, x) = (1/n!) (pi/mu)^n c1^n must be a positive integer multiple of
/// pi^n / n!. The integrality premise matches metrics normalized so the
/// Kähler class over pi is integral, which covers the model spaces.
pub fn chern_number_consistency(
    tensor: &KahlerCurvature,
    claimed_c1n: &Rational,
) -> Result<Verdict> {
    let n = tensor.dimension();
    let mu = tensor.einstein_mu()?;
    if mu.is_zero() {
        return Err(Error::ZeroEinsteinConstant);
    }
    let diag = diag_wedge_density(tensor)?;
    let mu_pow = rational_pow(&mu, n as i32)?;
    let consistent = Rational::from_integer(factorial(n as u32)) * &mu_pow;

    let implied_volume = PiRational::new(claimed_c1n / &consistent, n as i32);
    let volume_ratio = claimed_c1n / &mu_pow;
    let quantized = crate::scalar::is_positive_integer(&volume_ratio);

    let status = if diag == consistent && quantized {
        Status::Satisfied
    } else {
        Status::Violated
    };
    let conclusion = if status == Status::Satisfied {
        format!(
            "claimed c1^n = {claimed_c1n} is consistent: density matches n! mu^n and n! V(M,x)/pi^n = {volume_ratio} is a positive integer"
        )
    } else if diag != consistent {
        format!("density {diag} does not match the Einstein value {consistent}")
    } else {
        format!(
            "claimed c1^n = {claimed_c1n} implies n! V(M,x)/pi^n = {volume_ratio}, which is not a positive integer"
        )
    };
    Ok(Verdict::new(
        "chern-number-consistency",
        diag,
        consistent,
        status,
        conclusion,
    )
    .with_detail("implied-normalized-volume", implied_volume))
}
