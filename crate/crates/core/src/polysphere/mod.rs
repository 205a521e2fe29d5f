//! Exact multivariate polynomials with Laplacian-based integration over unit
//! spheres and harmonic decomposition.
//!
//! - [`MultiPoly`]: sparse polynomial over [`Rational`], terms stored in
//!   graded-lexicographic order
//! - [`double_factorial`]: m!! with 0!! = 1 and (-1)!! = 1
//! - [`apolar_inner`]: the differentiation inner product f(nabla) applied to g
//! - [`sphere_volume`]: exact vol(S^(m-1)) for even m as a pi-rational
//! - [`sphere_integral`]: integral of a homogeneous polynomial over the unit
//!   sphere via iterated Laplacians
//! - [`harmonic_decompose`]: f = sum |x|^(2j) h_(k-2j) with every h harmonic
//!
//! The text format for polynomials (`3/2*x1^2*x2 - x3^4`) lives in [`text`].

mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pi::PiRational;
use crate::scalar::{factorial, Rational};

pub use text::parse_poly;

/// Exponent vector of a monomial; the length is the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        MultiIndex(vec![0; nvars])
    }

    /// The monomial x_var (0-based variable position).
    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        MultiIndex(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |alpha|, the total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// alpha! = prod_i alpha_i!
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&e| factorial(e)).product()
    }

    fn combine(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Graded-lexicographic order: total degree first, then the exponent vector.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over exact rationals.
///
/// No zero coefficients are stored and every multi-index has length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        let mut poly = MultiPoly::zero(nvars);
        poly.add_term(MultiIndex::zero(nvars), value);
        poly
    }

    /// The variable x_(var+1) as a polynomial (0-based position).
    pub fn var(nvars: usize, var: usize) -> Result<Self> {
        if var >= nvars {
            return Err(Error::IndexOutOfRange {
                index: var + 1,
                bound: nvars,
            });
        }
        let mut poly = MultiPoly::zero(nvars);
        poly.add_term(MultiIndex::unit(nvars, var), Rational::one());
        Ok(poly)
    }

    pub fn monomial(nvars: usize, index: MultiIndex, coef: Rational) -> Result<Self> {
        if index.len() != nvars {
            return Err(Error::NvarsMismatch {
                left: index.len(),
                right: nvars,
            });
        }
        let mut poly = MultiPoly::zero(nvars);
        poly.add_term(index, coef);
        Ok(poly)
    }

    /// |x|^2 = sum_i x_i^2.
    pub fn norm_squared(nvars: usize) -> Self {
        let mut poly = MultiPoly::zero(nvars);
        for v in 0..nvars {
            let mut exps = vec![0; nvars];
            exps[v] = 2;
            poly.add_term(MultiIndex::new(exps), Rational::one());
        }
        poly
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &MultiIndex) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Accumulate one term, dropping the entry when it cancels to zero.
    pub fn add_term(&mut self, index: MultiIndex, coef: Rational) {
        debug_assert_eq!(index.len(), self.nvars);
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coef;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Largest total degree among the stored terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .next_back()
            .map(MultiIndex::degree)
            .unwrap_or(0)
    }

    /// The common degree of all terms, or an error for inhomogeneous input.
    /// The zero polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut degrees = self.terms.keys().map(MultiIndex::degree);
        let first = match degrees.next() {
            None => return Ok(0),
            Some(d) => d,
        };
        if degrees.all(|d| d == first) {
            Ok(first)
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn scale(&self, factor: &Rational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(idx, c)| (idx.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.nvars, Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// sum_j d^2/dx_j^2 applied to the polynomial.
    pub fn laplacian(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (index, coef) in &self.terms {
            for (j, &e) in index.exponents().iter().enumerate() {
                if e >= 2 {
                    let mut exps = index.exponents().to_vec();
                    exps[j] -= 2;
                    let factor = Rational::from_integer(BigInt::from(e as u64 * (e as u64 - 1)));
                    out.add_term(MultiIndex::new(exps), coef * factor);
                }
            }
        }
        out
    }

    /// The coefficient of the constant monomial when the polynomial is a
    /// constant; `None` when any variable survives.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.total_degree() == 0 {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    /// Floating-point evaluation; used only by statistical smoke tests.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(index, coef)| {
                let mono: f64 = index
                    .exponents()
                    .iter()
                    .zip(point)
                    .map(|(&e, &x)| x.powi(e as i32))
                    .product();
                crate::decimal::rational_to_f64(coef) * mono
            })
            .sum()
    }

    fn assert_same_nvars(&self, other: &MultiPoly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomial arithmetic across different variable counts"
        );
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_nvars(other);
        let mut out = self.clone();
        for (index, coef) in &other.terms {
            out.add_term(index.clone(), coef.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_nvars(other);
        let mut out = self.clone();
        for (index, coef) in &other.terms {
            out.add_term(index.clone(), -coef.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_nvars(other);
        let mut out = MultiPoly::zero(self.nvars);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                out.add_term(ia.combine(ib), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::serialize_poly(self))
    }
}

/// m!! with the conventions 0!! = 1 and (-1)!! = 1.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 {
        return Err(Error::DoubleFactorialDomain(m));
    }
    let mut acc = BigInt::one();
    let mut k = m;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// The differentiation inner product f(nabla) applied to g, which for equal
/// degree reduces to sum_alpha alpha! a_alpha b_alpha.
pub fn apolar_inner(f: &MultiPoly, g: &MultiPoly) -> Result<Rational> {
    if f.nvars() != g.nvars() {
        return Err(Error::NvarsMismatch {
            left: f.nvars(),
            right: g.nvars(),
        });
    }
    let deg_f = f.homogeneous_degree()?;
    let deg_g = g.homogeneous_degree()?;
    if deg_f != deg_g && !f.is_zero() && !g.is_zero() {
        return Err(Error::DegreeMismatch {
            left: deg_f,
            right: deg_g,
        });
    }
    let mut acc = Rational::zero();
    for (index, coef_f) in f.terms() {
        if let Some(coef_g) = g.terms.get(index) {
            acc += Rational::from_integer(index.factorial()) * coef_f * coef_g;
        }
    }
    Ok(acc)
}

/// Exact vol(S^(m-1)) for even m = 2n: 2 pi^n / (n-1)!.
///
/// Odd m would introduce a half-integer power of pi and is rejected; none of
/// the curvature integrals need it.
pub fn sphere_volume(m: usize) -> Result<PiRational> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "sphere volume needs at least 2 ambient variables, got {m}"
        )));
    }
    if !m.is_multiple_of(2) {
        return Err(Error::OddSphereDimension(m));
    }
    let n = (m / 2) as u32;
    let coef = Rational::new(BigInt::from(2), factorial(n - 1));
    Ok(PiRational::new(coef, n as i32))
}

/// Integrate a homogeneous polynomial over the unit sphere in its `nvars`
/// ambient variables.
///
/// Odd total degree integrates to zero exactly. For even degree k the value
/// is ((m-2)!! vol / (k!! (m+k-2)!!)) * Laplacian^(k/2)(p), the iterated
/// Laplacian being a constant. Inhomogeneous input is rejected so callers
/// cannot silently feed mixed-degree integrands.
pub fn sphere_integral(p: &MultiPoly) -> Result<PiRational> {
    let k = p.homogeneous_degree()?;
    if k % 2 == 1 {
        return Ok(PiRational::zero());
    }
    let m = p.nvars();
    let volume = sphere_volume(m)?;
    let mut reduced = p.clone();
    for _ in 0..k / 2 {
        reduced = reduced.laplacian();
    }
    let constant = reduced
        .constant_value()
        .expect("iterated laplacian of a degree-k polynomial is constant");
    let numer = double_factorial(m as i64 - 2)?;
    let denom = double_factorial(k as i64)? * double_factorial(m as i64 + k as i64 - 2)?;
    let factor = Rational::new(numer, denom) * constant;
    Ok(volume.scale(&factor))
}

/// The coefficient in front of |x|^(2(j-t)) h after applying the Laplacian t
/// times to |x|^(2j) h for harmonic h, where k is the total degree of the
/// input and m the variable count:
///
///   (2j)!! / (2j-2t)!! * (m+2k-2j-2)!! / (m+2k-2j-2t-2)!!
pub fn radial_laplacian_coefficient(m: usize, k: u32, j: u32, t: u32) -> BigInt {
    assert!(t <= j);
    let a = double_factorial(2 * j as i64).unwrap() / double_factorial(2 * (j - t) as i64).unwrap();
    let top = m as i64 + 2 * k as i64 - 2 * j as i64 - 2;
    let bottom = top - 2 * t as i64;
    let b = double_factorial(top).unwrap() / double_factorial(bottom).unwrap();
    a * b
}

/// Decompose a homogeneous polynomial of degree k as
/// f = sum_j |x|^(2j) h_(k-2j) with every h_(k-2j) harmonic.
///
/// Returns the harmonic components in descending degree
/// (h_k, h_(k-2), ...), with trailing zero components trimmed. The
/// triangular system exposed by applying the Laplacian t times is solved
/// top-down: the largest j is determined first, then each smaller j in turn.
pub fn harmonic_decompose(f: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let k = f.homogeneous_degree()?;
    let m = f.nvars();
    let levels = (k / 2) as usize; // j ranges over 0..=levels
    let norm_sq = MultiPoly::norm_squared(m);

    // Precompute Laplacian iterates of f.
    let mut laplacians = Vec::with_capacity(levels + 1);
    laplacians.push(f.clone());
    for t in 1..=levels {
        laplacians.push(laplacians[t - 1].laplacian());
    }

    // components[j] = h_(k-2j), solved for j = levels down to 0.
    let mut components: Vec<Option<MultiPoly>> = vec![None; levels + 1];
    for t in (0..=levels).rev() {
        let mut rhs = laplacians[t].clone();
        for (j, solved) in components.iter().enumerate().skip(t + 1) {
            let coef = radial_laplacian_coefficient(m, k, j as u32, t as u32);
            let radial = norm_sq.pow((j - t) as u32);
            let known = solved.as_ref().expect("solved in a previous pass");
            let term = (&radial * known).scale(&Rational::from_integer(coef));
            rhs = &rhs - &term;
        }
        let diag = radial_laplacian_coefficient(m, k, t as u32, t as u32);
        components[t] = Some(rhs.scale(&Rational::new(BigInt::one(), diag)));
    }

    let mut out: Vec<MultiPoly> = components
        .into_iter()
        .map(|c| c.expect("every level solved"))
        .collect();
    while out.len() > 1 && out.last().is_some_and(MultiPoly::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// Rebuild sum_j |x|^(2j) h_(k-2j) from harmonic components (test support
/// for decomposition checks).
pub fn recompose(components: &[MultiPoly], nvars: usize) -> MultiPoly {
    let norm_sq = MultiPoly::norm_squared(nvars);
    let mut acc = MultiPoly::zero(nvars);
    for (j, h) in components.iter().enumerate() {
        acc = &acc + &(&norm_sq.pow(j as u32) * h);
    }
    acc
}

#[cfg(test)]
mod tests;
