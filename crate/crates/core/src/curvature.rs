//! Kähler curvature tensors at a point in unitary-normal coordinates.
//!
//! Entries are exact rationals stored on canonical representatives of their
//! symmetry orbits; the metric at the point is the identity. The module
//! provides the model constructors (Fubini-Study and scaled products of
//! Fubini-Study blocks), Ricci contraction and Einstein verification, the
//! trace invariants, and the sphere moments of the holomorphic sectional
//! curvature computed both through the closed coefficient forms and through
//! a brute-force polynomial oracle.
//!
//! The closed moment form is the Einstein-case identity: for non-Einstein
//! tensors a third quadratic invariant (the Ricci norm) enters and the
//! two-term form no longer reproduces the integral.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::pi::PiRational;
use crate::polysphere::{sphere_integral, sphere_volume, MultiPoly};
use crate::scalar::{rat, rational_pow, Rational};
use num_traits::{One, Zero};

/// Ricci proportionality report: `ricci == mu * identity` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EinsteinData {
    pub mu: Rational,
    pub is_einstein: bool,
}

/// Curvature tensor R_(i jbar k lbar) at a point, indices 0-based in code
/// and 1-based in the file format and error messages.
///
/// The stored map is keyed by the minimal representative of each symmetry
/// orbit under the two index swaps (first<->third, second<->fourth) and the
/// pair swap coming from reality of the entries; zero values are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerCurvature {
    n: usize,
    entries: BTreeMap<[u8; 4], Rational>,
}

fn orbit(q: [u8; 4]) -> [[u8; 4]; 8] {
    let [i, j, k, l] = q;
    [
        [i, j, k, l],
        [k, j, i, l],
        [i, l, k, j],
        [k, l, i, j],
        [j, i, l, k],
        [j, k, l, i],
        [l, i, j, k],
        [l, k, j, i],
    ]
}

fn canonical(q: [u8; 4]) -> [u8; 4] {
    *orbit(q).iter().min().unwrap()
}

impl KahlerCurvature {
    /// The zero tensor in complex dimension `n`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize, "dimension out of range");
        KahlerCurvature {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Fubini-Study model: R = scale * (delta delta + delta delta),
    /// Einstein with mu = scale * (n + 1).
    pub fn fubini_study(n: usize, scale: Rational) -> Self {
        let mut tensor = KahlerCurvature::zero(n);
        for i in 0..n {
            for k in 0..n {
                let weight = if i == k { 2 } else { 1 };
                tensor.set(
                    [i as u8, i as u8, k as u8, k as u8],
                    &scale * Rational::from_integer(BigInt::from(weight)),
                );
            }
        }
        tensor
    }

    /// Block-diagonal product of scaled Fubini-Study factors. Cross-block
    /// entries vanish; factor t of dimension d contributes
    /// scale_t * (delta delta + delta delta) on its own indices.
    pub fn product_model(factors: &[(usize, Rational)]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "product model needs at least one factor".into(),
            ));
        }
        if factors.iter().any(|(d, _)| *d == 0) {
            return Err(Error::InvalidInput(
                "every factor must have positive dimension".into(),
            ));
        }
        let n: usize = factors.iter().map(|(d, _)| d).sum();
        if n > u8::MAX as usize {
            return Err(Error::InvalidInput(format!(
                "total dimension {n} exceeds the supported range"
            )));
        }
        let mut tensor = KahlerCurvature::zero(n);
        let mut offset = 0usize;
        for (dim, scale) in factors {
            let block = KahlerCurvature::fubini_study(*dim, scale.clone());
            for (key, value) in &block.entries {
                let shifted = key.map(|idx| idx + offset as u8);
                tensor.set(shifted, value.clone());
            }
            offset += dim;
        }
        Ok(tensor)
    }

    /// Build from (quadruple, value) pairs with 0-based indices,
    /// canonicalizing and rejecting conflicting assignments to one orbit.
    pub fn from_entries(
        n: usize,
        items: impl IntoIterator<Item = ([usize; 4], Rational)>,
    ) -> Result<Self> {
        let mut assigned: BTreeMap<[u8; 4], Rational> = BTreeMap::new();
        for (quad, value) in items {
            for &idx in &quad {
                if idx >= n {
                    return Err(Error::IndexOutOfRange {
                        index: idx + 1,
                        bound: n,
                    });
                }
            }
            let key = canonical(quad.map(|v| v as u8));
            if let Some(existing) = assigned.get(&key) {
                if *existing != value {
                    return Err(Error::OrbitConflict {
                        i: quad[0] + 1,
                        j: quad[1] + 1,
                        k: quad[2] + 1,
                        l: quad[3] + 1,
                        first: existing.to_string(),
                        second: value.to_string(),
                    });
                }
            } else {
                assigned.insert(key, value);
            }
        }
        let mut tensor = KahlerCurvature::zero(n);
        for (key, value) in assigned {
            if !value.is_zero() {
                tensor.entries.insert(key, value);
            }
        }
        Ok(tensor)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Assign the whole symmetry orbit of a quadruple (0-based indices).
    pub fn set(&mut self, quad: [u8; 4], value: Rational) {
        debug_assert!(quad.iter().all(|&v| (v as usize) < self.n));
        let key = canonical(quad);
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    /// Entry lookup through the symmetry orbit (0-based indices).
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        let key = canonical([i as u8, j as u8, k as u8, l as u8]);
        self.entries.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Canonical stored entries (orbit representatives and their values).
    pub fn canonical_entries(&self) -> impl Iterator<Item = (&[u8; 4], &Rational)> {
        self.entries.iter()
    }

    /// Ric_(i jbar) = sum_a R_(a abar i jbar).
    pub fn ricci(&self) -> Vec<Vec<Rational>> {
        let n = self.n;
        let mut ric = vec![vec![Rational::zero(); n]; n];
        for (i, row) in ric.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                for a in 0..n {
                    *slot += self.get(a, a, i, j);
                }
            }
        }
        ric
    }

    /// Decide whether Ricci is an exact multiple of the identity.
    pub fn einstein_constant(&self) -> EinsteinData {
        match self.einstein_mu() {
            Ok(mu) => EinsteinData {
                mu,
                is_einstein: true,
            },
            Err(_) => EinsteinData {
                mu: Rational::zero(),
                is_einstein: false,
            },
        }
    }

    /// The Einstein constant, or an error naming the offending Ricci entry.
    pub fn einstein_mu(&self) -> Result<Rational> {
        let ric = self.ricci();
        let mu = ric[0][0].clone();
        for (i, row) in ric.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expected = if i == j { mu.clone() } else { Rational::zero() };
                if *entry != expected {
                    return Err(Error::NotEinstein {
                        i: i + 1,
                        j: j + 1,
                        entry: entry.to_string(),
                        reference: mu.to_string(),
                    });
                }
            }
        }
        Ok(mu)
    }

    /// The double trace s = sum_(a,b) R_(a abar b bbar).
    pub fn double_trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for a in 0..self.n {
            for b in 0..self.n {
                acc += self.get(a, a, b, b);
            }
        }
        acc
    }

    /// sum over all n^4 quadruples of the squared entry (with multiplicity).
    pub fn norm_squared_sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    for l in 0..self.n {
                        let v = self.get(i, j, k, l);
                        acc += &v * &v;
                    }
                }
            }
        }
        acc
    }

    /// First trace invariant: (sum R_(a abar b bbar))^m.
    pub fn invariant_r1(&self, m: u32) -> Result<Rational> {
        if m < 1 {
            return Err(Error::InvalidInput("invariant_r1 needs m >= 1".into()));
        }
        rational_pow(&self.double_trace(), m as i32)
    }

    /// Second invariant: (sum of squared entries) * (double trace)^(m-2).
    pub fn invariant_r2(&self, m: u32) -> Result<Rational> {
        if m < 2 {
            return Err(Error::InvalidInput("invariant_r2 needs m >= 2".into()));
        }
        Ok(self.norm_squared_sum() * rational_pow(&self.double_trace(), m as i32 - 2)?)
    }

    /// The holomorphic sectional curvature R(xi, xibar, xi, xibar) as a real
    /// homogeneous degree-4 polynomial in 2n real variables, obtained by
    /// substituting xi_i = x_i + sqrt(-1) y_i (x_i at position i, y_i at
    /// position n + i). The imaginary part must cancel exactly.
    pub fn hsc_polynomial(&self) -> Result<MultiPoly> {
        let n = self.n;
        let nvars = 2 * n;
        // xi_i * conj(xi_j) as complex polynomials (re, im).
        let mut pair = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let xi = MultiPoly::var(nvars, i).unwrap();
                let yi = MultiPoly::var(nvars, n + i).unwrap();
                let xj = MultiPoly::var(nvars, j).unwrap();
                let yj = MultiPoly::var(nvars, n + j).unwrap();
                // (x_i + i y_i)(x_j - i y_j) = (x_i x_j + y_i y_j) + i (y_i x_j - x_i y_j)
                let re = &(&xi * &xj) + &(&yi * &yj);
                let im = &(&yi * &xj) - &(&xi * &yj);
                pair.push((re, im));
            }
        }
        let mut real = MultiPoly::zero(nvars);
        let mut imag = MultiPoly::zero(nvars);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let value = self.get(i, j, k, l);
                        if value.is_zero() {
                            continue;
                        }
                        let (re_a, im_a) = &pair[i * n + j];
                        let (re_b, im_b) = &pair[k * n + l];
                        let re = &(re_a * re_b) - &(im_a * im_b);
                        let im = &(re_a * im_b) + &(im_a * re_b);
                        real = &real + &re.scale(&value);
                        imag = &imag + &im.scale(&value);
                    }
                }
            }
        }
        if !imag.is_zero() {
            return Err(Error::SymmetryViolation);
        }
        Ok(real)
    }

    /// Sphere average of the holomorphic sectional curvature:
    /// 2 * (double trace) / (n (n + 1)).
    pub fn average_hsc(&self) -> Rational {
        let n = self.n as i64;
        self.double_trace() * rat(2, n * (n + 1))
    }

    /// Closed-form second moment over the sphere (Einstein-case identity):
    /// A * R1^(2) + B * R2^(2) with the explicit coefficients.
    pub fn moment_h2(&self) -> Result<PiRational> {
        let (a, b) = moment_coefficients(self.n)?;
        let first = a.scale(&self.invariant_r1(2)?);
        let second = b.scale(&self.invariant_r2(2)?);
        first.try_add(&second)
    }

    /// Integral of (H - Ave)^2 Ave^(n-2) over the unit sphere for an
    /// Einstein tensor:
    ///   (2^n V / (n^n (n+1)^n (n+2)(n+3))) * (-2 R1^(n) + n(n+1) R2^(n)).
    pub fn weighted_variance_integral(&self) -> Result<PiRational> {
        let n = self.n;
        if n < 2 {
            return Err(Error::Unsupported(
                "weighted variance integral needs complex dimension >= 2".into(),
            ));
        }
        self.einstein_mu()?;
        let volume = sphere_volume(2 * n)?;
        let nn = n as i64;
        let denominator = rational_pow(&rat(nn * (nn + 1), 1), n as i32)?
            * rat((nn + 2) * (nn + 3), 1);
        let prefactor = rational_pow(&rat(2, 1), n as i32)? / denominator;
        let bracket = rat(-2, 1) * self.invariant_r1(n as u32)?
            + rat(nn * (nn + 1), 1) * self.invariant_r2(n as u32)?;
        Ok(volume.scale(&(prefactor * bracket)))
    }

    /// Brute-force sphere moments (integral of H, integral of H^2) computed
    /// by expanding the sectional-curvature polynomial and integrating term
    /// by term; no closed coefficients are used.
    pub fn moments_oracle(&self) -> Result<(PiRational, PiRational)> {
        let h = self.hsc_polynomial()?;
        let first = sphere_integral(&h)?;
        let second = sphere_integral(&(&h * &h))?;
        Ok((first, second))
    }
}

/// The closed moment coefficients:
///   A = 4 (n+4) V / (n^2 (n+1)(n+2)(n+3)),
///   B = 4 V / (n (n+1)(n+2)(n+3)),
/// with V the volume of S^(2n-1).
pub fn moment_coefficients(n: usize) -> Result<(PiRational, PiRational)> {
    if n < 1 {
        return Err(Error::InvalidInput("dimension must be at least 1".into()));
    }
    let volume = sphere_volume(2 * n)?;
    let nn = n as i64;
    let a = volume.scale(&rat(
        4 * (nn + 4),
        nn * nn * (nn + 1) * (nn + 2) * (nn + 3),
    ));
    let b = volume.scale(&rat(4, nn * (nn + 1) * (nn + 2) * (nn + 3)));
    Ok((a, b))
}

/// Recover the moment coefficients by solving the 2x2 linear system built
/// from the two model spaces, with the right-hand sides supplied by the
/// brute-force oracle rather than any closed form.
pub fn solve_moment_coefficients(n: usize) -> Result<(PiRational, PiRational)> {
    let fs = KahlerCurvature::fubini_study(n, Rational::one());
    let product = KahlerCurvature::product_model(&vec![(1usize, Rational::one()); n])?;

    let c11 = fs.invariant_r1(2)?;
    let c12 = fs.invariant_r2(2)?;
    let c21 = product.invariant_r1(2)?;
    let c22 = product.invariant_r2(2)?;
    let (_, rhs1) = fs.moments_oracle()?;
    let (_, rhs2) = product.moments_oracle()?;

    let det = &c11 * &c22 - &c12 * &c21;
    if det.is_zero() {
        return Err(Error::InvalidInput("degenerate moment system".into()));
    }
    let a = rhs1
        .scale(&c22)
        .try_sub(&rhs2.scale(&c12))?
        .scale(&det.recip());
    let b = rhs2
        .scale(&c11)
        .try_sub(&rhs1.scale(&c21))?
        .scale(&det.recip());
    Ok((a, b))
}

/// Einstein projection: keep the tensor if its Ricci form is diagonal,
/// correcting the diagonal entries R_(i ibar i ibar) so that Ricci becomes
/// an exact multiple of the identity. Tensors with off-diagonal Ricci have
/// no symmetry-respecting diagonal correction and are rejected.
pub fn einstein_projection(tensor: &KahlerCurvature) -> Option<KahlerCurvature> {
    let n = tensor.dimension();
    let ric = tensor.ricci();
    for (i, row) in ric.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if i != j && !entry.is_zero() {
                return None;
            }
        }
    }
    let mut mu = Rational::zero();
    for (i, row) in ric.iter().enumerate() {
        mu += &row[i];
    }
    mu /= Rational::from_integer(BigInt::from(n as i64));
    let mut out = tensor.clone();
    for (i, row) in ric.iter().enumerate() {
        let quad = [i as u8, i as u8, i as u8, i as u8];
        let current = out.get(i, i, i, i);
        let corrected = current - &row[i] + &mu;
        out.set(quad, corrected);
    }
    Some(out)
}

/// Random tensor respecting all symmetries: independent small rational
/// values on random orbits (symmetrizing a random map over the orbits).
pub fn random_symmetric(n: usize, rng: &mut impl Rng) -> KahlerCurvature {
    let mut tensor = KahlerCurvature::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let quad = [i as u8, j as u8, k as u8, l as u8];
                    if canonical(quad) != quad {
                        continue;
                    }
                    if rng.random_range(0..3) == 0 {
                        continue; // keep some sparsity
                    }
                    let numer = rng.random_range(-4_i64..=4);
                    let denom = rng.random_range(1_i64..=3);
                    tensor.set(quad, rat(numer, denom));
                }
            }
        }
    }
    tensor
}

/// Random Einstein tensor with a nonzero Einstein constant.
///
/// Populates only orbit families whose Ricci contribution is diagonal
/// (the diagonal entries, the paired families R_(i ibar j jbar) and
/// R_(i jbar i jbar), and fully-distinct quadruples), then applies the
/// diagonal Einstein correction. A Fubini-Study multiple is added whenever
/// the corrected constant lands on zero.
pub fn random_einstein(n: usize, rng: &mut impl Rng) -> KahlerCurvature {
    fn draw(rng: &mut impl Rng) -> Rational {
        let numer: i64 = rng.random_range(-4_i64..=4);
        let denom: i64 = rng.random_range(1_i64..=2);
        rat(numer, denom)
    }
    loop {
        let mut tensor = KahlerCurvature::zero(n);
        for i in 0..n {
            tensor.set([i as u8; 4], draw(rng));
            for j in i + 1..n {
                let (i, j) = (i as u8, j as u8);
                tensor.set([i, i, j, j], draw(rng));
                tensor.set([i, j, i, j], draw(rng));
            }
        }
        if n >= 4 {
            for i in 0..n as u8 {
                for j in 0..n as u8 {
                    for k in 0..n as u8 {
                        for l in 0..n as u8 {
                            let quad = [i, j, k, l];
                            let distinct = i != j && i != k && i != l && j != k && j != l && k != l;
                            if distinct && canonical(quad) == quad && rng.random_range(0..2) == 0 {
                                tensor.set(quad, draw(rng));
                            }
                        }
                    }
                }
            }
        }
        let mut projected =
            einstein_projection(&tensor).expect("populated families keep Ricci diagonal");
        if projected.einstein_mu().expect("projection is Einstein").is_zero() {
            let fs = KahlerCurvature::fubini_study(n, Rational::one());
            for (key, value) in fs.entries {
                let updated = projected.get(
                    key[0] as usize,
                    key[1] as usize,
                    key[2] as usize,
                    key[3] as usize,
                ) + value;
                projected.set(key, updated);
            }
        }
        if !projected
            .einstein_mu()
            .expect("still Einstein after the shift")
            .is_zero()
        {
            return projected;
        }
    }
}

#[derive(Deserialize)]
struct TensorEntryFile(usize, usize, usize, usize, String);

#[derive(Deserialize)]
struct TensorFile {
    n: usize,
    entries: Vec<TensorEntryFile>,
}

/// Parse the tensor file format: `{"n": 2, "entries": [[i, j, k, l, "p/q"], ...]}`
/// with 1-based indices. Non-canonical quadruples are accepted and
/// canonicalized; conflicting values for one orbit are a load error.
pub fn tensor_from_json(text: &str) -> Result<KahlerCurvature> {
    let file: TensorFile = serde_json::from_str(text)?;
    if file.n < 1 || file.n > u8::MAX as usize {
        return Err(Error::InvalidInput(format!(
            "tensor dimension {} out of range",
            file.n
        )));
    }
    let mut items = Vec::with_capacity(file.entries.len());
    for TensorEntryFile(i, j, k, l, value) in file.entries {
        for idx in [i, j, k, l] {
            if idx == 0 || idx > file.n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    bound: file.n,
                });
            }
        }
        items.push(([i - 1, j - 1, k - 1, l - 1], crate::scalar::parse_rational(&value)?));
    }
    KahlerCurvature::from_entries(file.n, items)
}

/// Load a tensor file from disk.
pub fn load_tensor(path: &std::path::Path) -> Result<KahlerCurvature> {
    tensor_from_json(&std::fs::read_to_string(path)?)
}

/// The sphere-volume factor V = vol(S^(2n-1)) used throughout the moment
/// identities.
pub fn moment_volume(n: usize) -> Result<PiRational> {
    sphere_volume(2 * n)
}
