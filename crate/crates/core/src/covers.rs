//! Chern numbers of ramified covers of projective space.
//!
//! Whitney's formula gives the Chern classes of a smooth degree-d
//! hypersurface B in P^n as the truncation of (1+z)^(n+1)/(1+dz); Izawa's
//! correction formula then expresses the difference between a Chern number
//! of the cover and mu times the same Chern number of the base as a sum of
//! ramification-weighted polynomials P_alpha capped against [B]. The double
//! cover branched over a smooth even-degree hypersurface specializes the
//! general formula; at degree d = 2n + 4 it produces manifolds with ample
//! canonical bundle whose Chern numbers violate the reverse Yau inequality.
//!
//! Every class on B in this pipeline is a rational multiple of a power of
//! the hyperplane restriction, so intersection evaluation reduces to the
//! single normalizer z^(n-1)[B] = d.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::criteria::{reverse_yau, EinsteinSign, ManifoldData};
use crate::error::{Error, Result};
use crate::scalar::{rat, rat_int, rational_pow, Rational};
use crate::verdict::{Status, Verdict};

/// Polynomial in the hyperplane-restriction class z, truncated beyond the
/// dimension of the carrier variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    dim: usize,
    coeffs: BTreeMap<usize, Rational>,
}

impl GradedClass {
    pub fn zero(dim: usize) -> Self {
        GradedClass {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        GradedClass::term(dim, 0, Rational::one())
    }

    /// coeff * z^degree, dropped silently when degree exceeds dim.
    pub fn term(dim: usize, degree: usize, coeff: Rational) -> Self {
        let mut class = GradedClass::zero(dim);
        class.add_term(degree, coeff);
        class
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, degree: usize, coeff: Rational) {
        if degree > self.dim || coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn add(&self, other: &GradedClass) -> GradedClass {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (&degree, coeff) in &other.coeffs {
            out.add_term(degree, coeff.clone());
        }
        out
    }

    pub fn mul(&self, other: &GradedClass) -> GradedClass {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = GradedClass::zero(self.dim);
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &other.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> GradedClass {
        let mut acc = GradedClass::one(self.dim);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, factor: &Rational) -> GradedClass {
        let mut out = GradedClass::zero(self.dim);
        for (&degree, coeff) in &self.coeffs {
            out.add_term(degree, coeff * factor);
        }
        out
    }

    /// Evaluate the top-degree coefficient against the fundamental class,
    /// given the normalizer z^dim [B].
    pub fn cap_top(&self, normalizer: &Rational) -> Rational {
        self.coeff(self.dim) * normalizer
    }
}

/// Total Chern class of a smooth degree-d hypersurface in P^n: the
/// truncation of (1+z)^(n+1) / (1+dz) through degree n-1. In particular
/// c1 = (n+1-d) z and c2 = (d^2 - (n+1)d + n(n+1)/2) z^2.
pub fn hypersurface_chern(n: usize, d: u32) -> Result<GradedClass> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "hypersurface Chern classes need ambient dimension >= 2".into(),
        ));
    }
    if d < 1 {
        return Err(Error::InvalidInput("hypersurface degree must be >= 1".into()));
    }
    let dim = n - 1;
    let mut total = GradedClass::zero(dim);
    // (1+z)^(n+1) * sum_k (-d)^k z^k, truncated.
    for degree in 0..=dim {
        let mut coeff = Rational::zero();
        for a in 0..=degree {
            let binom = binomial(n as u32 + 1, a as u32);
            let inverse = rational_pow(&rat_int(-(d as i64)), (degree - a) as i32)?;
            coeff += Rational::from_integer(binom) * inverse;
        }
        total.add_term(degree, coeff);
    }
    Ok(total)
}

fn binomial(n: u32, k: u32) -> num_bigint::BigInt {
    if k > n {
        return num_bigint::BigInt::zero();
    }
    let mut acc = num_bigint::BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Branch-component datum of a ramified covering: the degree of the branch
/// hypersurface, the ramification profile as pairs (r, covering degree of
/// the component over the branch), and the covering multiplicity.
///
/// Consistency: the sheets over a generic branch point add up to the
/// covering multiplicity, sum_t n_t (r_t + 1) = mu; the induced branch
/// multiplicity is b = sum_t n_t r_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDatum {
    pub degree: u32,
    pub profile: Vec<(u32, u32)>,
    pub mu_cover: u32,
}

impl BranchDatum {
    /// The double cover branched over a smooth degree-d hypersurface:
    /// one ramification component with r = 1 mapping isomorphically.
    pub fn double_cover(degree: u32) -> Self {
        BranchDatum {
            degree,
            profile: vec![(1, 1)],
            mu_cover: 2,
        }
    }

    /// Unramified mu-sheeted datum (r = 0 on every sheet).
    pub fn unramified(degree: u32, mu: u32) -> Self {
        BranchDatum {
            degree,
            profile: vec![(0, mu)],
            mu_cover: mu,
        }
    }

    /// b = sum_t n_t r_t, the multiplicity of the component in the branch
    /// divisor.
    pub fn branch_multiplicity(&self) -> u32 {
        self.profile.iter().map(|(r, n)| r * n).sum()
    }

    pub fn validate(&self) -> Result<()> {
        let sheets: u32 = self.profile.iter().map(|(r, n)| (r + 1) * n).sum();
        if sheets != self.mu_cover || self.profile.is_empty() {
            return Err(Error::RamificationInconsistent {
                sheets,
                multiplicity: self.mu_cover,
            });
        }
        Ok(())
    }
}

/// The coefficient polynomials P_alpha of l^alpha in
///   ( prod_i (c_i + c_(i-1) l)^(N_i) - prod_i c_i^(N_i) ) / l,
/// evaluated on the supplied total Chern class (c_0 = 1). The exponent
/// pattern must have weight sum i N_i = dim + 1.
pub fn izawa_p_alpha(pattern: &[u32], classes: &GradedClass) -> Result<Vec<GradedClass>> {
    let n = classes.dim() + 1;
    let weight: u32 = pattern
        .iter()
        .enumerate()
        .map(|(i, count)| (i as u32 + 1) * count)
        .sum();
    if weight != n as u32 {
        return Err(Error::PatternWeight {
            expected: n as u32,
            got: weight,
        });
    }
    let dim = classes.dim();
    // Polynomial in l with GradedClass coefficients; degree in l is at most n.
    let mut product: Vec<GradedClass> = vec![GradedClass::one(dim)];
    for (position, &count) in pattern.iter().enumerate() {
        let i = position + 1;
        let c_i = GradedClass::term(dim, i, classes.coeff(i));
        let c_prev = if i == 1 {
            GradedClass::one(dim)
        } else {
            GradedClass::term(dim, i - 1, classes.coeff(i - 1))
        };
        for _ in 0..count {
            // Multiply by (c_i + c_(i-1) l).
            let mut next: Vec<GradedClass> = vec![GradedClass::zero(dim); product.len() + 1];
            for (power, value) in product.iter().enumerate() {
                next[power] = next[power].add(&value.mul(&c_i));
                next[power + 1] = next[power + 1].add(&value.mul(&c_prev));
            }
            product = next;
        }
    }
    // Subtract the pure term (the l^0 coefficient) and divide by l.
    let mut out = Vec::with_capacity(n);
    for alpha in 0..n {
        out.push(
            product
                .get(alpha + 1)
                .cloned()
                .unwrap_or_else(|| GradedClass::zero(dim)),
        );
    }
    Ok(out)
}

/// The correction sum of the covering formula for one smooth branch
/// component:
///   sum_alpha ( sum_t n_t (1 - (r_t + 1)^(alpha+1)) / (r_t + 1)^alpha )
///             * P_alpha * c1(L_B)^alpha capped against [B].
pub fn izawa_correction(
    pattern: &[u32],
    branch: &BranchDatum,
    branch_classes: &GradedClass,
    line_bundle_class: &GradedClass,
    intersection_normalizer: &Rational,
) -> Result<Rational> {
    branch.validate()?;
    let p_alpha = izawa_p_alpha(pattern, branch_classes)?;
    let dim = branch_classes.dim();
    let mut total = Rational::zero();
    let mut l_power = GradedClass::one(dim);
    for (alpha, p) in p_alpha.iter().enumerate() {
        let mut weight = Rational::zero();
        for &(r, n_t) in &branch.profile {
            let r_plus_1 = rat_int(r as i64 + 1);
            let numerator = Rational::one() - rational_pow(&r_plus_1, alpha as i32 + 1)?;
            weight += rat_int(n_t as i64) * numerator / rational_pow(&r_plus_1, alpha as i32)?;
        }
        if !weight.is_zero() {
            total += weight * p.mul(&l_power).cap_top(intersection_normalizer);
        }
        l_power = l_power.mul(line_bundle_class);
    }
    Ok(total)
}

/// Chern numbers of a double cover of P^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverNumbers {
    /// Signed c_1^n of the cover.
    pub c1n: Rational,
    /// Signed c_2 c_1^(n-2) of the cover.
    pub c1c2: Rational,
    /// Whether the canonical bundle of the cover is ample
    /// (pullback of a positive multiple of the hyperplane).
    pub canonical_ample: bool,
}

/// The exponent pattern for c_1^(n-2) c_2 in dimension n.
fn c1c2_pattern(n: usize) -> Vec<u32> {
    let mut pattern = vec![0u32; n];
    pattern[0] = n as u32 - 2;
    pattern[1] = 1;
    pattern
}

/// Chern numbers of the double cover of P^n branched over a smooth
/// hypersurface of even degree d.
///
/// The canonical bundle is the pullback of (d/2 - n - 1) H, giving
/// c_1^n = (-1)^n 2 (d/2 - n - 1)^n, and c_2 c_1^(n-2) follows from the
/// covering correction formula applied to the pattern c_1^(n-2) c_2 with
/// branch classes from Whitney's formula.
pub fn double_cover_pn(n: usize, d: u32) -> Result<CoverNumbers> {
    if n < 2 {
        return Err(Error::InvalidInput("cover dimension must be at least 2".into()));
    }
    if !d.is_multiple_of(2) || d == 0 {
        return Err(Error::InvalidInput(format!(
            "the double cover needs a positive even branch degree, got {d}"
        )));
    }
    let nn = n as i64;
    let half_d = d as i64 / 2;

    let k_top = rational_pow(&rat_int(half_d - nn - 1), n as i32)? * rat_int(2);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let c1n = rat_int(sign) * k_top;

    let branch = BranchDatum::double_cover(d);
    let classes = hypersurface_chern(n, d)?;
    let line_bundle = GradedClass::term(n - 1, 1, rat_int(d as i64));
    let normalizer = rat_int(d as i64);
    let correction = izawa_correction(
        &c1c2_pattern(n),
        &branch,
        &classes,
        &line_bundle,
        &normalizer,
    )?;
    // mu * c_1^(n-2) c_2 (P^n) = 2 * (n+1)^(n-2) * n(n+1)/2 = n (n+1)^(n-1).
    let base_term = rat_int(nn) * rational_pow(&rat_int(nn + 1), n as i32 - 1)?;
    let c1c2 = base_term + correction;

    Ok(CoverNumbers {
        c1n,
        c1c2,
        canonical_ample: half_d > nn + 1,
    })
}

/// The same c_2 c_1^(n-2) through the long scalar expansion of the covering
/// formula specialized to the double cover, with no shared machinery:
///   2 [ (n+1-d/2)^(n-2) (q + d(n+1-d)/2) - (n+1)^(n-2) (q + d(n+1-d)) ]
///   + n (n+1)^(n-1),   q = d^2 - (n+1)d + n(n+1)/2.
pub fn double_cover_c1c2_expanded(n: usize, d: u32) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidInput("cover dimension must be at least 2".into()));
    }
    let nn = n as i64;
    let dd = d as i64;
    let q = rat_int(dd * dd - (nn + 1) * dd) + rat(nn * (nn + 1), 2);
    let first = rational_pow(&(rat_int(nn + 1) - rat(dd, 2)), n as i32 - 2)?
        * (&q + rat(dd * (nn + 1 - dd), 2));
    let second = rational_pow(&rat_int(nn + 1), n as i32 - 2)?
        * (&q + rat_int(dd * (nn + 1 - dd)));
    Ok(rat_int(2) * (first - second) + rat_int(nn) * rational_pow(&rat_int(nn + 1), n as i32 - 1)?)
}

/// Run the reverse Yau check on the double cover branched in degree 2n + 4.
///
/// For 2 <= n <= 5 the Chern numbers are c_1^n = (-1)^n 2 and
/// c_2 c_1^(n-2) = (-1)^(n-2) (3n^2 + 11n + 12), and the inequality must
/// come out violated: the cover has ample canonical bundle but carries no
/// hermitian metric of negative holomorphic sectional curvature.
pub fn no_nhsc_verdict(n: usize) -> Result<Verdict> {
    if !(2..=5).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "the construction applies in dimensions 2..=5, got {n}"
        )));
    }
    let numbers = double_cover_pn(n, 2 * n as u32 + 4)?;
    let data = ManifoldData {
        n,
        c1n: numbers.c1n.clone(),
        c2c1: numbers.c1c2.clone(),
        h_m: Some(Rational::one()),
        delta: None,
        v_mx: None,
        einstein_sign: EinsteinSign::Negative,
        torus_amplitude: None,
    };
    let mut verdict = reverse_yau(&data)?;
    if verdict.status != Status::Violated {
        return Err(Error::InvalidInput(format!(
            "expected a violated reverse Yau inequality in dimension {n}"
        )));
    }
    verdict.conclusion = format!(
        "double cover of P^{n} branched in degree {}: ample canonical bundle, c1^n = {}, c2*c1^(n-2) = {}, yet the reverse Yau inequality fails, so the manifold carries no hermitian metric with negative holomorphic sectional curvature",
        2 * n + 4,
        numbers.c1n,
        numbers.c1c2,
    );
    Ok(verdict)
}
