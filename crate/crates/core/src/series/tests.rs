use proptest::prelude::*;

use super::gf::*;
use super::*;
use crate::mpreal::{const_ln2, const_pi, const_sqrt5, golden_alpha, golden_beta, pow2, Precision};
use crate::sequences::fib;
use crate::specfun::{euler_gamma, ln_gamma, riemann_zeta, zeta_int, zeta_int_minus_one};

const BITS: u32 = 256;

fn r(v: f64) -> Real {
    Float::with_val(BITS, v)
}

fn diff(a: &Real, b: &Real) -> f64 {
    Float::with_val(BITS, a - b).abs().to_f64()
}

#[track_caller]
fn assert_contains(closed: &Real, cv: &CertifiedValue) {
    let d = diff(closed, &cv.value);
    let slack = (8.0 - BITS as f64).exp2();
    assert!(
        d <= cv.abs_error_bound + slack,
        "|closed - series| = {d:e} exceeds bound {:e}",
        cv.abs_error_bound
    );
}

fn sum(spec: &SeriesSpec) -> CertifiedValue {
    eval_series(spec, 1e-70, DEFAULT_MAX_TERMS).unwrap()
}

#[test]
fn geometric_series_of_halves() {
    let spec = SeriesSpec::new(
        BITS,
        1,
        TailRule::Geometric(GeometricEnvelope::new(1.0, 0, 0.5)),
        Arc::new(|k| Float::with_val(BITS, 1) >> k as u32),
    );
    let cv = eval_series(&spec, 1e-30, DEFAULT_MAX_TERMS).unwrap();
    assert!(diff(&cv.value, &r(1.0)) <= cv.abs_error_bound);
    assert!(cv.abs_error_bound <= 1e-30);
    assert!(cv.terms_used < 110);
}

#[test]
fn odd_zeta_over_powers_of_four_is_ln2_minus_gamma() {
    let p = Precision::exact(BITS);
    let spec = SeriesSpec::new(
        BITS,
        1,
        // ζ(2k+1)/(2k+1) ≤ ζ(3)/3 < 0.41
        TailRule::Geometric(GeometricEnvelope::new(0.41, 0, 0.25)),
        Arc::new(move |k| {
            let z = zeta_int(2 * k as u32 + 1, p);
            Float::with_val(BITS, z >> (2 * k as u32)) / (2 * k + 1)
        }),
    );
    let cv = sum(&spec);
    let closed = const_ln2(p) - euler_gamma(p);
    assert_contains(&closed, &cv);
    assert!(cv.abs_error_bound < 1e-69);
}

#[test]
fn zeta_minus_one_times_fibonacci() {
    let p = Precision::exact(BITS);
    let a = golden_alpha(p);
    let rule = tail_rule_zeta_family(0, &a).unwrap();
    let spec = SeriesSpec::new(
        BITS,
        2,
        rule,
        Arc::new(move |k| {
            let f = fib(k as i64 - 1);
            Float::with_val(BITS, zeta_int_minus_one(k as u32, p) * f)
        }),
    );
    let cv = sum(&spec);
    let pi = const_pi(p);
    let s5 = const_sqrt5(p);
    let arg = Float::with_val(BITS, &s5 * &pi) / 2u32;
    let closed = Float::with_val(BITS, &pi / &s5) * arg.tan() + 1u32;
    assert_contains(&closed, &cv);
}

#[test]
fn zeta_family_rule() {
    let p = Precision::exact(BITS);
    let TailRule::Geometric(env) = tail_rule_zeta_family(1, &golden_alpha(p)).unwrap() else {
        panic!("expected geometric rule");
    };
    assert_eq!(env.k0(), Some(5));
    assert!((5..200).all(|k| env.ratio_bound(k) < 1.0));
    assert!(tail_rule_zeta_family(0, &r(2.0)).is_err());
    assert!(tail_rule_zeta_family(0, &r(-2.5)).is_err());

    let spec = gf_log_gamma_series(&r(0.0)).unwrap();
    let cv = sum(&spec);
    assert!(cv.value.is_zero());
}

#[test]
fn zeta_minus_one_envelope_holds() {
    let p = Precision::exact(BITS);
    for k in 2..=64u32 {
        let v = zeta_int_minus_one(k, p);
        let env = pow2(BITS, -(k as i32)) * ZETA_MINUS_ONE_ENVELOPE;
        assert!(v < env, "k={k}");
    }
}

#[test]
fn reciprocal_family_rule() {
    let ratio = |b: u32| match tail_rule_reciprocal_family(&rug::Integer::from(b)).unwrap() {
        TailRule::Geometric(e) => e.ratio,
        _ => unreachable!(),
    };
    assert!((ratio(2) - 0.5).abs() < 1e-11);
    let base = fib(4) * crate::sequences::lucas(4);
    assert_eq!(base, 21);
    assert!((ratio(21) - 1.0 / 21.0).abs() < 1e-12);
    assert!(tail_rule_reciprocal_family(&rug::Integer::from(1)).is_err());
}

#[test]
fn limits_are_errors() {
    let spec = gf_odd_zeta_series(&r(1.5)).unwrap();
    assert!(matches!(
        eval_series(&spec, 1e-60, 10),
        Err(Error::NonConvergence { max_terms: 10 })
    ));
    let divergent = SeriesSpec::new(
        BITS,
        1,
        TailRule::Geometric(GeometricEnvelope::new(1.0, 0, 1.0)),
        Arc::new(|_| Float::with_val(BITS, 1)),
    );
    assert!(matches!(eval_series(&divergent, 1e-10, 100), Err(Error::Domain { .. })));
    assert!(eval_series(&spec, 0.0, 10).is_err());
}

#[test]
fn partial_fraction_rules() {
    // Σ 1/(n(n+1)) = 1
    let poles = Arc::new(vec![(r(1.0), r(0.0)), (r(-1.0), r(1.0))]);
    let telescoping = SeriesSpec::new(
        BITS,
        1,
        TailRule::PartialFractions(poles),
        Arc::new(|n| Float::with_val(BITS, n * (n + 1)).recip()),
    );
    let cv = sum(&telescoping);
    assert!(diff(&cv.value, &r(1.0)) <= cv.abs_error_bound);
    assert!(cv.abs_error_bound < 1e-69);

    // Σ 1/(n² + n − 1) = 1 + (√5π/5) tan(√5π/2), with 1/((n+α)(n+β)).
    let p = Precision::exact(BITS);
    let (a, b, s5) = (golden_alpha(p), golden_beta(p), const_sqrt5(p));
    let inv = Float::with_val(BITS, s5.recip_ref());
    let poles = Arc::new(vec![(-inv.clone(), a), (inv, b)]);
    let spec = SeriesSpec::new(
        BITS,
        1,
        TailRule::PartialFractions(poles),
        Arc::new(|n| Float::with_val(BITS, n * n + n - 1).recip()),
    );
    let cv = sum(&spec);
    let pi = const_pi(p);
    let arg = Float::with_val(BITS, &s5 * &pi) / 2u32;
    let closed = Float::with_val(BITS, &s5 * &pi) / 5u32 * arg.tan() + 1u32;
    assert_contains(&closed, &cv);

    let unbalanced = Arc::new(vec![(r(1.0), r(0.0)), (r(-0.5), r(1.0))]);
    let bad = SeriesSpec::new(BITS, 1, TailRule::PartialFractions(unbalanced), Arc::new(|_| r(0.0)));
    assert!(matches!(eval_series(&bad, 1e-10, 100), Err(Error::Domain { .. })));
}

#[test]
fn doubling_the_terms_stays_within_the_bound() {
    let p = Precision::exact(BITS);
    let specs = [
        gf_even_zeta_deriv_series(&golden_alpha(p)).unwrap(),
        gf_log_gamma_deriv_series(&golden_alpha(p)).unwrap(),
        gf_hurwitz_odd_series(&r(0.4), &r(1.0)).unwrap(),
    ];
    for spec in &specs {
        let cv = eval_series(spec, 1e-40, DEFAULT_MAX_TERMS).unwrap();
        let doubled = eval_series_fixed(spec, 2 * cv.terms_used, 1e-40).unwrap();
        assert!(diff(&cv.value, &doubled.value) < cv.abs_error_bound);
    }
}

// Closed-form examples.

#[test]
fn even_zeta_examples() {
    let half = gf_even_zeta(&r(0.5)).unwrap();
    assert!(diff(&half, &(Float::with_val(BITS, 1) / 3u32)) < 1e-70);

    let z = pow2(BITS, -20);
    let small = gf_even_zeta(&z).unwrap();
    let lead = riemann_zeta(&r(2.0), Precision::exact(BITS)).unwrap() - 1u32;
    let rel = (Float::with_val(BITS, &small / &z) / lead - 1u32).abs();
    assert!(rel < 1e-5);

    let a = golden_alpha(Precision::exact(BITS));
    assert_contains(&gf_even_zeta(&a).unwrap(), &sum(&gf_even_zeta_series(&a).unwrap()));
    assert!(gf_even_zeta(&r(1.0)).is_err());
    assert!(gf_even_zeta(&r(2.0)).is_err());
}

#[test]
fn even_zeta_deriv_examples() {
    let p = Precision::exact(BITS);
    let pi = const_pi(p);
    let expected = Float::with_val(BITS, pi.square_ref()) / 8u32 - Float::with_val(BITS, 19) / 18u32;
    assert!(diff(&gf_even_zeta_deriv(&r(0.5)).unwrap(), &expected) < 1e-70);

    let a = golden_alpha(p);
    let a2 = Float::with_val(BITS, a.square_ref());
    let arg = Float::with_val(BITS, &pi * &a);
    let csc2 = Float::with_val(BITS, arg.sin().square_ref()).recip();
    let rational = (Float::with_val(BITS, &a * 9u32) + 7u32) / &a2;
    let stated = (Float::with_val(BITS, pi.square_ref()) * &a2 * csc2 - rational) / 2u32;
    let closed = gf_even_zeta_deriv(&a).unwrap();
    assert!(diff(&closed, &stated) < 1e-70);
    assert_contains(&closed, &sum(&gf_even_zeta_deriv_series(&a).unwrap()));

    assert!(gf_even_zeta_deriv(&r(0.0)).unwrap().is_zero());
}

#[test]
fn log_gamma_examples() {
    let p = Precision::exact(BITS);
    let g = euler_gamma(p);
    assert!(gf_log_gamma(&r(0.0)).unwrap().abs() < 1e-70);
    let one = gf_log_gamma(&r(1.0)).unwrap();
    assert!(diff(&one, &(1u32 - g.clone())) < 1e-70);
    assert_contains(&one, &sum(&gf_log_gamma_series(&r(1.0)).unwrap()));

    let a = golden_alpha(p);
    let b2 = Float::with_val(BITS, golden_beta(p).square_ref());
    let stated = Float::with_val(BITS, (1u32 - g) * &a) + ln_gamma(&b2).unwrap();
    let closed = gf_log_gamma(&a).unwrap();
    assert!(diff(&closed, &stated) < 1e-70);
    assert_contains(&closed, &sum(&gf_log_gamma_series(&a).unwrap()));
}

#[test]
fn log_gamma_deriv_examples() {
    let p = Precision::exact(BITS);
    let g = euler_gamma(p);
    assert!(gf_log_gamma_deriv(&r(0.0)).unwrap().abs() < 1e-70);
    let one = gf_log_gamma_deriv(&r(1.0)).unwrap();
    assert!(diff(&one, &(2u32 - g)) < 1e-70);
    assert_contains(&one, &sum(&gf_log_gamma_deriv_series(&r(1.0)).unwrap()));
    let a = golden_alpha(p);
    assert_contains(&gf_log_gamma_deriv(&a).unwrap(), &sum(&gf_log_gamma_deriv_series(&a).unwrap()));
}

#[test]
fn odd_zeta_examples() {
    assert!(gf_odd_zeta(&r(0.0)).unwrap().abs() < 1e-70);
    for z in [r(0.5), golden_alpha(Precision::exact(BITS))] {
        assert_contains(&gf_odd_zeta(&z).unwrap(), &sum(&gf_odd_zeta_series(&z).unwrap()));
    }
}

#[test]
fn hurwitz_examples() {
    let p = Precision::exact(BITS);
    let g = euler_gamma(p);
    let pi = const_pi(p);
    assert!(gf_hurwitz_log(&r(0.0), &r(1.0)).unwrap().abs() < 1e-70);
    let expected = Float::with_val(BITS, pi.ln_ref()) / 2u32 - Float::with_val(BITS, &g / 2u32);
    let v = gf_hurwitz_log(&r(0.5), &r(1.0)).unwrap();
    assert!(diff(&v, &expected) < 1e-70);

    let third = Float::with_val(BITS, 1) / 3u32;
    let v = gf_hurwitz_log(&third, &r(2.0)).unwrap();
    // ζ(k, 2) = ζ(k) − 1
    let shifted = SeriesSpec::new(
        BITS,
        2,
        tail_rule_zeta_family(0, &third).unwrap(),
        Arc::new({
            let third = third.clone();
            move |k| Float::with_val(BITS, zeta_int_minus_one(k as u32, p) * crate::mpreal::powi(&third, k as i64)) / k
        }),
    );
    assert_contains(&v, &sum(&shifted));

    assert!(gf_hurwitz_even(&r(0.0), &r(1.0)).unwrap().abs() < 1e-70);
    let v = gf_hurwitz_even(&r(0.5), &r(1.0)).unwrap();
    assert!(diff(&v, &(Float::with_val(BITS, &pi / 2u32).ln())) < 1e-70);
    let w = gf_hurwitz_even(&r(-0.5), &r(1.0)).unwrap();
    assert!(diff(&v, &w) < 1e-70);

    assert!(gf_hurwitz_odd(&r(0.0), &r(1.0)).unwrap().abs() < 1e-70);
    let v = gf_hurwitz_odd(&r(0.5), &r(1.0)).unwrap();
    let expected = (const_ln2(p) - g) / 2u32;
    assert!(diff(&v, &expected) < 1e-70);
    let w = gf_hurwitz_odd(&r(-0.5), &r(1.0)).unwrap();
    assert!(diff(&v, &-w) < 1e-70);

    assert!(gf_hurwitz_log(&r(1.5), &r(1.0)).is_err());
    assert!(gf_hurwitz_even(&r(0.5), &r(0.0)).is_err());
}

#[test]
fn derived_generating_functions_chain() {
    let points = [(0.5, 1.0), (0.3, 2.0), (-0.7, 1.5), (0.9, 3.0), (0.2, 0.5)];
    for (z, a) in points {
        let (z, a) = (r(z), r(a));
        let log_plus = gf_hurwitz_log(&z, &a).unwrap();
        let log_minus = gf_hurwitz_log(&-z.clone(), &a).unwrap();
        let even = gf_hurwitz_even(&z, &a).unwrap();
        let odd = gf_hurwitz_odd(&z, &a).unwrap();
        let both = Float::with_val(BITS, &log_plus + &log_minus);
        assert!(diff(&even, &both) < 1e-70);
        let half = Float::with_val(BITS, &even / 2u32);
        assert!(diff(&(log_plus - half), &odd) < 1e-70);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn zeta_generating_functions_contain_their_series(z in -1.7f64..1.7) {
        prop_assume!(z.abs() > 1e-3 && (z.abs() - 1.0).abs() > 1e-3);
        let z = r(z);
        assert_contains(&gf_even_zeta(&z).unwrap(), &sum(&gf_even_zeta_series(&z).unwrap()));
        assert_contains(&gf_even_zeta_deriv(&z).unwrap(), &sum(&gf_even_zeta_deriv_series(&z).unwrap()));
        assert_contains(&gf_log_gamma(&z).unwrap(), &sum(&gf_log_gamma_series(&z).unwrap()));
        assert_contains(&gf_log_gamma_deriv(&z).unwrap(), &sum(&gf_log_gamma_deriv_series(&z).unwrap()));
        assert_contains(&gf_odd_zeta(&z).unwrap(), &sum(&gf_odd_zeta_series(&z).unwrap()));
    }

    #[test]
    fn hurwitz_generating_functions_contain_their_series(a in 0.5f64..3.0, t in -0.8f64..0.8) {
        let (z, a) = (r(a * t), r(a));
        assert_contains(&gf_hurwitz_log(&z, &a).unwrap(), &sum(&gf_hurwitz_log_series(&z, &a).unwrap()));
        assert_contains(&gf_hurwitz_even(&z, &a).unwrap(), &sum(&gf_hurwitz_even_series(&z, &a).unwrap()));
        assert_contains(&gf_hurwitz_odd(&z, &a).unwrap(), &sum(&gf_hurwitz_odd_series(&z, &a).unwrap()));
    }
}
