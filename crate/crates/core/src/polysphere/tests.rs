use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::decimal::pi_rational_to_f64;
use crate::scalar::{rat, rat_int};

/// (sum_i (x_i^2 + y_i^2)^2)^2 in 2n variables, with x_i at position i and
/// y_i at position n + i.
pub(crate) fn h8(n: usize) -> MultiPoly {
    sum_modulus_fourth(n).pow(2)
}

/// sum_i (x_i^2 + y_i^2)^2 in 2n variables.
pub(crate) fn sum_modulus_fourth(n: usize) -> MultiPoly {
    let nvars = 2 * n;
    let mut acc = MultiPoly::zero(nvars);
    for i in 0..n {
        let x = MultiPoly::var(nvars, i).unwrap();
        let y = MultiPoly::var(nvars, n + i).unwrap();
        let modulus_sq = &(&x * &x) + &(&y * &y);
        acc = &acc + &modulus_sq.pow(2);
    }
    acc
}

fn random_poly(rng: &mut StdRng, nvars: usize, degree: u32, terms: usize) -> MultiPoly {
    let mut poly = MultiPoly::zero(nvars);
    for _ in 0..terms {
        let mut exps = vec![0u32; nvars];
        let mut remaining = degree;
        for e in exps.iter_mut().take(nvars - 1) {
            let pick = rng.random_range(0..=remaining);
            *e = pick;
            remaining -= pick;
        }
        exps[nvars - 1] = remaining;
        let numer = rng.random_range(-6_i64..=6);
        let denom = rng.random_range(1_i64..=4);
        poly.add_term(MultiIndex::new(exps), rat(numer, denom));
    }
    poly
}

#[test]
fn double_factorial_values() {
    assert_eq!(double_factorial(0).unwrap(), BigInt::one());
    assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
    assert_eq!(double_factorial(7).unwrap(), BigInt::from(105));
    assert_eq!(double_factorial(8).unwrap(), BigInt::from(384));
    assert!(matches!(
        double_factorial(-2),
        Err(Error::DoubleFactorialDomain(-2))
    ));
}

#[test]
fn laplacian_basics() {
    let p = parse_poly("x1^2 + x2^2", 2).unwrap();
    assert_eq!(p.laplacian(), MultiPoly::constant(2, rat_int(4)));
    let q = parse_poly("x1*x2", 2).unwrap();
    assert!(q.laplacian().is_zero());
}

#[test]
fn iterated_laplacian_of_h8() {
    // Delta^4 (sum (x_i^2+y_i^2)^2)^2 = 2^13 n (3n + 15) for every n.
    for n in 2..=6usize {
        let mut p = h8(n);
        for _ in 0..4 {
            p = p.laplacian();
        }
        let expected = rat_int(8192 * n as i64 * (3 * n as i64 + 15));
        assert_eq!(p.constant_value().unwrap(), expected, "n = {n}");
    }
}

#[test]
fn apolar_inner_examples() {
    let x1x2 = parse_poly("x1*x2", 2).unwrap();
    assert_eq!(apolar_inner(&x1x2, &x1x2).unwrap(), rat_int(1));
    let x1sq = parse_poly("x1^2", 2).unwrap();
    assert_eq!(apolar_inner(&x1sq, &x1sq).unwrap(), rat_int(2));
    let x2sq = parse_poly("x2^2", 2).unwrap();
    assert_eq!(apolar_inner(&x1sq, &x2sq).unwrap(), rat_int(0));
}

#[test]
fn apolar_inner_rejects_mismatches() {
    let f = parse_poly("x1^2", 2).unwrap();
    let g = parse_poly("x1", 2).unwrap();
    assert!(matches!(
        apolar_inner(&f, &g),
        Err(Error::DegreeMismatch { .. })
    ));
    let h = parse_poly("x1^2", 3).unwrap();
    assert!(matches!(
        apolar_inner(&f, &h),
        Err(Error::NvarsMismatch { .. })
    ));
}

#[test]
fn apolar_inner_is_positive_definite_and_symmetric() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..40 {
        let nvars = rng.random_range(2..=4);
        let degree = rng.random_range(1..=5);
        let f = random_poly(&mut rng, nvars, degree, 4);
        let g = random_poly(&mut rng, nvars, degree, 4);
        let fg = apolar_inner(&f, &g).unwrap();
        let gf = apolar_inner(&g, &f).unwrap();
        assert_eq!(fg, gf);
        let ff = apolar_inner(&f, &f).unwrap();
        if f.is_zero() {
            assert!(ff.is_zero());
        } else {
            assert!(ff > Rational::zero(), "<f, f> must be positive, f = {f}");
        }
    }
}

#[test]
fn sphere_volumes() {
    assert_eq!(sphere_volume(2).unwrap(), PiRational::new(rat_int(2), 1));
    assert_eq!(sphere_volume(4).unwrap(), PiRational::new(rat_int(2), 2));
    assert_eq!(sphere_volume(6).unwrap(), PiRational::new(rat_int(1), 3));
    assert!(matches!(
        sphere_volume(3),
        Err(Error::OddSphereDimension(3))
    ));
    assert!(sphere_volume(1).is_err());
}

#[test]
fn sphere_integral_odd_degree_vanishes() {
    let p = parse_poly("x1^3", 4).unwrap();
    assert_eq!(sphere_integral(&p).unwrap(), PiRational::zero());
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..20 {
        let nvars = 2 * rng.random_range(1..=3usize);
        let degree = 2 * rng.random_range(0..=2) + 1;
        let p = random_poly(&mut rng, nvars, degree, 5);
        assert_eq!(sphere_integral(&p).unwrap(), PiRational::zero());
    }
}

#[test]
fn sphere_integral_of_norm_square_is_the_volume() {
    for m in [2usize, 4, 6, 8] {
        let p = MultiPoly::norm_squared(m);
        assert_eq!(sphere_integral(&p).unwrap(), sphere_volume(m).unwrap());
    }
}

#[test]
fn sphere_integral_of_h8() {
    // integral of (sum (x^2+y^2)^2)^2 over S^(2n-1) = 4(n+5) V / ((n+1)(n+2)(n+3)).
    for n in 2..=5usize {
        let volume = sphere_volume(2 * n).unwrap();
        let nn = n as i64;
        let expected = volume.scale(&rat(
            4 * (nn + 5),
            (nn + 1) * (nn + 2) * (nn + 3),
        ));
        assert_eq!(sphere_integral(&h8(n)).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn sphere_integral_rejects_inhomogeneous_input() {
    let p = parse_poly("x1^2 + x2", 2).unwrap();
    assert!(matches!(sphere_integral(&p), Err(Error::Inhomogeneous)));
}

#[test]
fn decompose_square_of_first_variable() {
    // x1^2 = (x1^2 - |x|^2/m) + |x|^2 * (1/m)
    for m in [2usize, 3, 5] {
        let p = parse_poly("x1^2", m).unwrap();
        let parts = harmonic_decompose(&p).unwrap();
        assert_eq!(parts.len(), 2);
        let expected_h2 = &p - &MultiPoly::norm_squared(m).scale(&rat(1, m as i64));
        assert_eq!(parts[0], expected_h2);
        assert_eq!(parts[1], MultiPoly::constant(m, rat(1, m as i64)));
        assert!(parts[0].laplacian().is_zero());
    }
}

#[test]
fn decompose_returns_harmonics_unchanged() {
    let harmonic = parse_poly("x1*x2", 3).unwrap();
    let parts = harmonic_decompose(&harmonic).unwrap();
    assert_eq!(parts, vec![harmonic]);
    // Degree-3 harmonic in two variables: x1^3 - 3 x1 x2^2.
    let cubic = parse_poly("x1^3 - 3*x1*x2^2", 2).unwrap();
    assert!(cubic.laplacian().is_zero());
    assert_eq!(harmonic_decompose(&cubic).unwrap(), vec![cubic]);
}

#[test]
fn decompose_cube_in_four_variables() {
    let p = parse_poly("x1^3", 4).unwrap();
    let parts = harmonic_decompose(&p).unwrap();
    assert_eq!(parts.len(), 2);
    for h in &parts {
        assert!(h.laplacian().is_zero(), "component {h} is not harmonic");
    }
    assert_eq!(recompose(&parts, 4), p);
}

#[test]
fn decompose_random_polynomials_exactly() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..30 {
        let nvars = rng.random_range(2..=5usize);
        let degree = rng.random_range(0..=6);
        let p = random_poly(&mut rng, nvars, degree, 6);
        let parts = harmonic_decompose(&p).unwrap();
        for h in &parts {
            assert!(h.laplacian().is_zero());
        }
        assert_eq!(recompose(&parts, nvars), p);
    }
}

#[test]
fn radial_laplacian_coefficients_match_direct_computation() {
    // Delta^t (|x|^(2j) h) for random harmonic h of degree d equals the
    // stated coefficient times |x|^(2(j-t)) h.
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for _ in 0..20 {
        let nvars = rng.random_range(2..=4usize);
        let d = rng.random_range(1..=3u32);
        let raw = random_poly(&mut rng, nvars, d, 4);
        let harmonic = match harmonic_decompose(&raw) {
            Ok(parts) if !parts[0].is_zero() => parts[0].clone(),
            _ => continue,
        };
        let norm_sq = MultiPoly::norm_squared(nvars);
        for j in 0..=3u32 {
            let f = &norm_sq.pow(j) * &harmonic;
            let k = d + 2 * j;
            for t in 0..=j {
                let mut lap = f.clone();
                for _ in 0..t {
                    lap = lap.laplacian();
                }
                let coef = radial_laplacian_coefficient(nvars, k, j, t);
                let expected =
                    (&norm_sq.pow(j - t) * &harmonic).scale(&Rational::from_integer(coef));
                assert_eq!(lap, expected, "nvars={nvars} d={d} j={j} t={t}");
            }
        }
    }
}

#[test]
fn spherical_harmonics_of_distinct_degree_are_orthogonal() {
    // Harmonics of different degrees integrate to zero against each other,
    // checked for degrees <= 6 in every even variable count <= 6.
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for nvars in [2usize, 4, 6] {
        let mut harmonics: Vec<MultiPoly> = Vec::new();
        for degree in 0..=6u32 {
            let raw = random_poly(&mut rng, nvars, degree, 5);
            if let Ok(parts) = harmonic_decompose(&raw) {
                if !parts[0].is_zero() && parts[0].homogeneous_degree().unwrap() == degree {
                    harmonics.push(parts[0].clone());
                }
            }
        }
        for a in 0..harmonics.len() {
            for b in 0..a {
                let product = &harmonics[a] * &harmonics[b];
                assert_eq!(
                    sphere_integral(&product).unwrap(),
                    PiRational::zero(),
                    "nvars={nvars} degrees {} vs {}",
                    harmonics[a].homogeneous_degree().unwrap(),
                    harmonics[b].homogeneous_degree().unwrap()
                );
            }
        }
    }
}

fn sample_sphere(rng: &mut StdRng, m: usize) -> Vec<f64> {
    loop {
        let mut point: Vec<f64> = Vec::with_capacity(m);
        while point.len() < m {
            // Box-Muller transform.
            let u1: f64 = rng.random::<f64>().max(1e-300);
            let u2: f64 = rng.random();
            let radius = (-2.0 * u1.ln()).sqrt();
            point.push(radius * (2.0 * std::f64::consts::PI * u2).cos());
            if point.len() < m {
                point.push(radius * (2.0 * std::f64::consts::PI * u2).sin());
            }
        }
        let norm = point.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            for x in &mut point {
                *x /= norm;
            }
            return point;
        }
    }
}

#[test]
fn monte_carlo_agrees_with_exact_integrals() {
    // Statistical smoke test: the exact value sits within three standard
    // errors of a million-sample Monte Carlo estimate.
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let integrands = [
        h8(2),
        parse_poly("x1^2*x2^2", 4).unwrap(),
        parse_poly("x1^4 + x5^2*x6^2", 6).unwrap(),
    ];
    for p in &integrands {
        let m = p.nvars();
        let exact = pi_rational_to_f64(&sphere_integral(p).unwrap());
        let volume = pi_rational_to_f64(&sphere_volume(m).unwrap());
        let samples = 1_000_000usize;
        let mut sum = 0.0f64;
        let mut sum_sq = 0.0f64;
        for _ in 0..samples {
            let v = p.eval_f64(&sample_sphere(&mut rng, m));
            sum += v;
            sum_sq += v * v;
        }
        let mean = sum / samples as f64;
        let variance = (sum_sq / samples as f64 - mean * mean).max(0.0);
        let std_err = (variance / samples as f64).sqrt();
        let estimate = mean * volume;
        let tolerance = 3.0 * std_err * volume + 1e-9;
        assert!(
            (estimate - exact).abs() <= tolerance,
            "estimate {estimate} vs exact {exact} (tolerance {tolerance})"
        );
    }
}
