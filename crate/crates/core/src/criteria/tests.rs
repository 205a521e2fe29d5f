use std::cmp::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::scalar::{rat, rat_int};

fn data(n: usize, c1n: Rational, c2c1: Rational, h_m: Option<Rational>) -> ManifoldData {
    ManifoldData {
        n,
        c1n,
        c2c1,
        h_m,
        delta: None,
        v_mx: None,
        einstein_sign: EinsteinSign::Negative,
        torus_amplitude: None,
    }
}

fn rhs_rational(verdict: &Verdict) -> Rational {
    match &verdict.rhs {
        Scalar::Rational(r) => r.clone(),
        other => panic!("expected a rational right side, got {other}"),
    }
}

#[test]
fn reverse_yau_worked_instance_is_violated() {
    let verdict = reverse_yau(&data(2, rat_int(2), rat_int(46), Some(rat_int(1)))).unwrap();
    assert_eq!(verdict.status, Status::Violated);
    assert_eq!(verdict.lhs, Scalar::Rational(rat_int(276)));
    assert_eq!(verdict.rhs, Scalar::Rational(rat(53, 2)));
}

#[test]
fn reverse_yau_holds_for_projective_plane_data() {
    let verdict = reverse_yau(&data(2, rat_int(9), rat_int(3), Some(rat_int(1)))).unwrap();
    assert_eq!(verdict.status, Status::Satisfied);
    assert_eq!(verdict.lhs, Scalar::Rational(rat_int(18)));
    assert_eq!(verdict.rhs, Scalar::Rational(rat(477, 4)));
}

#[test]
fn reverse_yau_small_h_m_limit() {
    // As H_m shrinks the right side tends to n |c1^n|; with c2 c1^(n-2) = 0
    // the inequality reads 0 <= n |c1^n|.
    let verdict = reverse_yau(&data(3, rat_int(5), rat_int(0), Some(rat(1, 1_000_000)))).unwrap();
    assert_eq!(verdict.status, Status::Satisfied);
    assert_eq!(verdict.lhs, Scalar::Rational(rat_int(0)));
    assert!(rhs_rational(&verdict) > rat_int(15));
}

#[test]
fn reverse_yau_defaults_h_m_to_one() {
    let explicit = reverse_yau(&data(2, rat_int(2), rat_int(46), Some(rat_int(1)))).unwrap();
    let defaulted = reverse_yau(&data(2, rat_int(2), rat_int(46), None)).unwrap();
    assert_eq!(rhs_rational(&explicit), rhs_rational(&defaulted));
}

#[test]
fn reverse_yau_needs_nonzero_c1n() {
    assert!(reverse_yau(&data(2, rat_int(0), rat_int(1), None)).is_err());
}

#[test]
fn reverse_yau_rhs_is_monotone_in_h_m() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0301);
    for _ in 0..50 {
        let n = rng.random_range(2..=5usize);
        let c1n = rat(rng.random_range(1..100), 1);
        let h1 = rat(rng.random_range(1..1000), rng.random_range(1..1000));
        let h2 = &h1 + rat(rng.random_range(0..100), 7);
        let v1 = reverse_yau(&data(n, c1n.clone(), rat_int(1), Some(h1))).unwrap();
        let v2 = reverse_yau(&data(n, c1n, rat_int(1), Some(h2))).unwrap();
        assert!(rhs_rational(&v1) <= rhs_rational(&v2));
    }
}

#[test]
fn bounded_curvature_surface_case() {
    let verdict = ample_bound(&data(2, rat_int(2), rat_int(46), Some(rat_int(1)))).unwrap();
    assert_eq!(verdict.status, Status::Violated);
    assert_eq!(verdict.lhs, Scalar::Rational(rat_int(276)));
    assert_eq!(verdict.rhs, Scalar::Rational(rat_int(94)));

    let ok = ample_bound(&data(2, rat_int(9), rat_int(3), Some(rat_int(1)))).unwrap();
    assert_eq!(ok.status, Status::Satisfied);
    assert_eq!(ok.lhs, Scalar::Rational(rat_int(18)));
    assert_eq!(ok.rhs, Scalar::Rational(rat_int(423)));
}

#[test]
fn bounded_curvature_higher_dimensions() {
    // c2 c1^(n-2) = 0 is always within the bound.
    let even = ample_bound(&data(4, rat_int(7), rat_int(0), Some(rat_int(1)))).unwrap();
    assert_eq!(even.status, Status::Satisfied);
    let odd = ample_bound(&data(3, rat_int(7), rat_int(0), Some(rat_int(1)))).unwrap();
    assert_eq!(odd.status, Status::Satisfied);
    // Odd n produces a radical right side.
    assert!(matches!(odd.rhs, Scalar::Root(_)));

    // Grossly oversized c2 c1^(n-2) is flagged.
    let bad = ample_bound(&data(3, rat_int(1), rat_int(10_000), Some(rat_int(1)))).unwrap();
    assert_eq!(bad.status, Status::Violated);
}

#[test]
fn bounded_curvature_odd_case_matches_numeric_evaluation() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0302);
    for _ in 0..50 {
        let n = [3usize, 5][rng.random_range(0..2)];
        let c1n = rat(rng.random_range(1..50), 1);
        let c2c1 = rat(rng.random_range(0..2000), rng.random_range(1..5));
        let h_m = rat(rng.random_range(1..10), rng.random_range(1..10));
        let verdict = ample_bound(&data(n, c1n, c2c1, Some(h_m))).unwrap();
        if let (Scalar::Rational(lhs), Scalar::Root(rhs)) = (&verdict.lhs, &verdict.rhs) {
            let approx = rhs.approx(60);
            let difference = lhs - &approx;
            if difference.abs() > rat(1, 1_000_000) {
                let numeric_ok = difference.is_negative() || difference.is_zero();
                assert_eq!(numeric_ok, verdict.status == Status::Satisfied);
            }
        } else {
            panic!("odd-dimension bound must compare a rational against a radical");
        }
    }
}

#[test]
fn pinch_threshold_reference_values() {
    // 1 - sqrt(4/1620) and 1 - sqrt(4/360), to six decimals.
    let t9 = pinch_threshold(2, &rat_int(9)).unwrap();
    assert_eq!(t9, RootExpr::new(rat_int(1), rat_int(-1), rat(1, 405), 2).unwrap());
    let d9: f64 = t9.decimal(12).parse().unwrap();
    assert!((d9 - 0.950309).abs() < 1e-6);

    let t2 = pinch_threshold(2, &rat_int(2)).unwrap();
    assert_eq!(t2, RootExpr::new(rat_int(1), rat_int(-1), rat(1, 90), 2).unwrap());
    let d2: f64 = t2.decimal(12).parse().unwrap();
    assert!((d2 - 0.894591).abs() < 1e-6);
}

#[test]
fn pinch_threshold_is_always_below_one() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0303);
    for _ in 0..100 {
        let n = rng.random_range(2..=6usize);
        let c1n = rat(rng.random_range(1..10_000), rng.random_range(1..100));
        let threshold = pinch_threshold(n, &c1n).unwrap();
        assert_eq!(exact_compare(&Rational::one(), &threshold), Ordering::Greater);
    }
}

#[test]
fn pinch_threshold_decreases_in_c1n() {
    // Larger |c1^n| shrinks the radicand, pushing the threshold up; the
    // threshold is 1 - sqrt(radicand), so it increases with |c1^n| and the
    // pinching requirement becomes more demanding.
    let small = pinch_threshold(2, &rat_int(2)).unwrap();
    let large = pinch_threshold(2, &rat_int(9)).unwrap();
    assert!(small.radicand() > large.radicand());
    // Decide 1 - sqrt(r_small) < 1 - sqrt(r_large) exactly through the
    // comparator: the larger-c1n threshold exceeds the smaller-c1n one.
    let probe = large.approx(40);
    assert_eq!(exact_compare(&probe, &small), Ordering::Greater);
}

#[test]
fn pinch_verdicts() {
    let above = pinch_verdict(2, &rat_int(2), &rat(9, 10), EinsteinSign::Positive).unwrap();
    assert_eq!(above.status, Status::Satisfied);
    assert!(above.conclusion.contains("projective"));

    let below = pinch_verdict(2, &rat_int(2), &rat(4473, 5000), EinsteinSign::Negative).unwrap();
    // 0.8946 > 0.894590..., still above the threshold.
    assert_eq!(below.status, Status::Satisfied);
    assert!(below.conclusion.contains("ball quotient"));

    let far_below = pinch_verdict(2, &rat_int(2), &rat(1, 2), EinsteinSign::Positive).unwrap();
    assert_eq!(far_below.status, Status::Violated);
}

#[test]
fn torus_bound_surface_case() {
    // V(M,x) = pi^2: the amplitude bound is sqrt(1/90) = 1/(3 sqrt(10)).
    let v = PiRational::new(rat_int(1), 2);
    let bound = torus_bound(2, &v, &rat_int(1)).unwrap();
    assert_eq!(
        bound,
        RootExpr::new(rat_int(0), rat_int(1), rat(1, 90), 2).unwrap()
    );
    // a = 1/10 < 1/(3 sqrt(10)) ~ 0.105409.
    let verdict = torus_verdict(2, &v, &rat(1, 10), None).unwrap();
    assert_eq!(verdict.status, Status::Satisfied);
    assert!(verdict.conclusion.contains("torus"));
    let verdict = torus_verdict(2, &v, &rat(11, 100), None).unwrap();
    assert_eq!(verdict.status, Status::Violated);
}

#[test]
fn torus_bound_dimension_three() {
    // n = 3, V = pi^3, a = 1: B = 16/11520 = 1/720 with exponent 1/(n-2) = 1.
    let v = PiRational::new(rat_int(1), 3);
    let bound = torus_bound(3, &v, &rat_int(1)).unwrap();
    assert_eq!(bound.as_rational().unwrap(), rat(1, 720));

    let decided = torus_verdict(3, &v, &rat_int(1), Some(&rat(1, 1000))).unwrap();
    assert_eq!(decided.status, Status::Satisfied);
    let undecided = torus_verdict(3, &v, &rat_int(1), None).unwrap();
    assert_eq!(undecided.status, Status::Inconclusive);
}

#[test]
fn torus_bound_shrinks_with_large_amplitude() {
    let v = PiRational::new(rat_int(1), 3);
    let huge = torus_bound(3, &v, &rat_int(1_000_000)).unwrap();
    // Any nonzero average fails against the collapsed bound.
    let verdict = torus_verdict(3, &v, &rat_int(1_000_000), Some(&rat(1, 100))).unwrap();
    assert_eq!(verdict.status, Status::Violated);
    assert!(huge.as_rational().unwrap() < rat(1, 100_000_000));
}

#[test]
fn torus_bound_units_are_checked() {
    let wrong_units = PiRational::new(rat_int(1), 1);
    assert!(matches!(
        torus_bound(3, &wrong_units, &rat_int(1)),
        Err(Error::ResidualPiPower(..))
    ));
}

#[test]
fn small_curvature_reference_values() {
    let b9 = small_hsc_bound(2, &rat_int(9)).unwrap();
    assert_eq!(
        b9,
        RootExpr::new(rat_int(0), rat(4, 3), rat(1, 180), 2).unwrap()
    );
    let d9: f64 = b9.decimal(12).parse().unwrap();
    assert!((d9 - 0.099381).abs() < 1e-6);

    let b2 = small_hsc_bound(2, &rat_int(2)).unwrap();
    assert_eq!(
        b2,
        RootExpr::new(rat_int(0), rat(4, 3), rat(1, 40), 2).unwrap()
    );
    let d2: f64 = b2.decimal(12).parse().unwrap();
    assert!((d2 - 0.210819).abs() < 1e-6);
}

#[test]
fn small_curvature_bound_decreases_in_c1n() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0304);
    for _ in 0..50 {
        let n = rng.random_range(2..=5usize);
        let c1 = rat(rng.random_range(1..1000), rng.random_range(1..10));
        let c2 = &c1 + rat(rng.random_range(1..100), 3);
        let b1 = small_hsc_bound(n, &c1).unwrap();
        let b2 = small_hsc_bound(n, &c2).unwrap();
        // Same coefficient and index; the radicand decides.
        assert!(b1.radicand() > b2.radicand());
        let probe = b2.approx(50);
        assert_eq!(exact_compare(&probe, &b1), Ordering::Less);
    }
}

/// Numeric oracle: compare x against a 100-digit evaluation of the
/// expression, demanding agreement whenever the gap is numerically decisive.
fn assert_matches_numeric(x: &Rational, expr: &RootExpr) {
    let approx = expr.approx(100);
    let gap = x - &approx;
    let decisive = gap.abs() > Rational::new(1.into(), num_bigint::BigInt::from(10u8).pow(95));
    let exact = exact_compare(x, expr);
    if decisive {
        let numeric = if gap.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        assert_eq!(exact, numeric, "x = {x}, expr = {expr}");
    } else {
        // Within the numeric noise band only exact ties are expected for
        // the inputs generated here.
        assert_eq!(exact, Ordering::Equal, "x = {x}, expr = {expr}");
    }
}

#[test]
fn exact_comparator_agrees_with_high_precision_numerics() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0305);
    for _ in 0..200 {
        let n = rng.random_range(2..=6usize);
        let c1n = rat(rng.random_range(1..100_000), rng.random_range(1..1000));
        let expr = match rng.random_range(0..3) {
            0 => pinch_threshold(n, &c1n).unwrap(),
            1 => small_hsc_bound(n, &c1n).unwrap(),
            _ => {
                let v = PiRational::new(rat(rng.random_range(1..50), rng.random_range(1..5)), n as i32);
                torus_bound(n, &v, &rat(rng.random_range(1..20), 3)).unwrap()
            }
        };
        // A spread-out probe and a near-threshold probe.
        let uniform = rat(rng.random_range(-1000..3000), 1000);
        assert_matches_numeric(&uniform, &expr);
        let anchor = expr.approx(25);
        let nudge = Rational::new(
            rng.random_range(1..100).into(),
            num_bigint::BigInt::from(10u8).pow(20),
        );
        let above = &anchor + &nudge;
        let below = &anchor - &nudge;
        assert_eq!(exact_compare(&above, &expr), Ordering::Greater);
        assert_eq!(exact_compare(&below, &expr), Ordering::Less);
        assert_matches_numeric(&above, &expr);
        assert_matches_numeric(&below, &expr);
    }
}

#[test]
fn manifold_documents_parse() {
    let full = manifold_from_json(
        r#"{
            "n": 2,
            "c1n": "2",
            "c2c1": "46",
            "h_m": "1",
            "delta": "9/10",
            "v_mx": {"coef": "1", "pi_power": 2},
            "einstein_sign": "negative",
            "a": "1/10"
        }"#,
    )
    .unwrap();
    assert_eq!(full.n, 2);
    assert_eq!(full.c1n, rat_int(2));
    assert_eq!(full.h_m, Some(rat_int(1)));
    assert_eq!(full.v_mx, Some(PiRational::new(rat_int(1), 2)));
    assert_eq!(full.einstein_sign, EinsteinSign::Negative);
    assert_eq!(full.torus_amplitude, Some(rat(1, 10)));

    let minimal = manifold_from_json(
        r#"{"n": 3, "c1n": "-2", "c2c1": "-72", "einstein_sign": "negative"}"#,
    )
    .unwrap();
    assert!(minimal.h_m.is_none() && minimal.delta.is_none() && minimal.v_mx.is_none());

    assert!(manifold_from_json(r#"{"n": 2, "c1n": "1", "c2c1": "1", "einstein_sign": "flat"}"#).is_err());
    assert!(manifold_from_json(
        r#"{"n": 2, "c1n": "1", "c2c1": "1", "delta": "3/2", "einstein_sign": "zero"}"#
    )
    .is_err());
    assert!(manifold_from_json(
        r#"{"n": 2, "c1n": "1", "c2c1": "1", "h_m": "-1", "einstein_sign": "zero"}"#
    )
    .is_err());
}
