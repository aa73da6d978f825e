use proptest::prelude::*;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::*;
use crate::mpreal::{const_pi, golden_alpha, pow2};

fn close(a: &Real, b: &Real, log2_tol: i32) -> bool {
    let d = Float::with_val(a.prec().max(b.prec()), a - b).abs();
    d < pow2(64, log2_tol)
}

#[track_caller]
fn assert_close(a: &Real, b: &Real, log2_tol: i32) {
    assert!(
        close(a, b, log2_tol),
        "{} vs {} (tol 2^{log2_tol})",
        a.to_string_radix(10, Some(30)),
        b.to_string_radix(10, Some(30))
    );
}

fn r(bits: u32, v: f64) -> Real {
    Float::with_val(bits, v)
}

#[test]
fn euler_gamma_digits_and_refinement() {
    let g64 = euler_gamma(Precision::exact(64));
    assert!(g64.to_string_radix(10, Some(11)).starts_with("5.772156649"));
    let g256 = euler_gamma(Precision::exact(256));
    assert_close(&g64, &g256, -62);
    let mpfr = Float::with_val(256, Constant::Euler);
    assert_close(&g256, &mpfr, -254);
}

#[test]
fn euler_gamma_matches_minus_digamma_one() {
    for bits in [64, 256, 512] {
        let p = Precision::exact(bits);
        let psi1 = digamma(&Float::with_val(bits, 1)).unwrap();
        assert_close(&euler_gamma(p), &-psi1, 8 - bits as i32);
    }
}

#[test]
fn ln_gamma_examples() {
    let bits = 256;
    let zero = Float::with_val(bits, 0);
    assert_close(&ln_gamma(&r(bits, 1.0)).unwrap(), &zero, -250);
    assert_close(&ln_gamma(&r(bits, 2.0)).unwrap(), &zero, -250);
    let ln_sqrt_pi = const_pi(Precision::exact(bits)).ln() / 2u32;
    assert_close(&ln_gamma(&r(bits, 0.5)).unwrap(), &ln_sqrt_pi, -250);
    for x in [0.3, 1.7, 5.5] {
        let x = r(bits, x);
        let lhs = ln_gamma(&Float::with_val(bits, &x + 1u32)).unwrap() - ln_gamma(&x).unwrap();
        let lhs = lhs - x.ln();
        assert_close(&lhs, &zero, -248);
    }
}

#[test]
fn ln_gamma_rejects_nonpositive() {
    assert!(matches!(ln_gamma(&r(64, 0.0)), Err(Error::Pole { .. })));
    assert!(matches!(ln_gamma(&r(64, -2.5)), Err(Error::Pole { .. })));
}

#[test]
fn digamma_examples() {
    let bits = 256;
    let p = Precision::exact(bits);
    let g = euler_gamma(p);
    assert_close(&digamma(&r(bits, 1.0)).unwrap(), &-g.clone(), -250);
    let h4 = Float::with_val(bits, 25) / 12u32; // 1 + 1/2 + 1/3 + 1/4
    assert_close(&digamma(&r(bits, 5.0)).unwrap(), &(h4 - g), -250);
    assert!(matches!(digamma(&r(64, -3.0)), Err(Error::Pole { .. })));
    assert!(matches!(digamma(&r(64, 0.0)), Err(Error::Pole { .. })));
    assert!(matches!(digamma(&r(64, -0.5)), Err(Error::Domain { .. })));
}

#[test]
fn digamma_at_golden_ratio_matches_direct_sum() {
    // ψ(x) = −γ + Σ_{n≥0} (1/(n+1) − 1/(n+x)), 10⁶ terms plus the integral
    // tail ln((N+x)/(N+1)); the remaining error is O(1/N²).
    let bits = 128;
    let x = golden_alpha(Precision::exact(bits));
    let n_terms = 1_000_000u32;
    let mut sum = Float::with_val(bits, 0);
    for n in 0..n_terms {
        sum += Float::with_val(bits, n + 1).recip();
        sum -= Float::with_val(bits, &x + n).recip();
    }
    let tail = Float::with_val(bits, &x + n_terms) / Float::with_val(bits, n_terms + 1);
    sum += tail.ln();
    let oracle = sum - euler_gamma(Precision::exact(bits));
    assert_close(&digamma(&x).unwrap(), &oracle, -36);
}

#[test]
fn polygamma_examples() {
    let bits = 256;
    let p = Precision::exact(bits);
    let pi2_6 = Float::with_val(bits, const_pi(p).square_ref()) / 6u32;
    assert_close(&polygamma(1, &r(bits, 1.0)).unwrap(), &pi2_6, -250);
    let shifted = Float::with_val(bits, &pi2_6 - 1u32);
    assert_close(&polygamma(1, &r(bits, 2.0)).unwrap(), &shifted, -250);
    let zeta3 = Float::with_val(bits, 3).zeta();
    assert_close(&polygamma(2, &r(bits, 1.0)).unwrap(), &(zeta3 * -2i32), -248);
}

#[test]
fn riemann_zeta_examples() {
    let p = Precision::exact(256);
    let pi = const_pi(p);
    let z2 = riemann_zeta(&r(64, 2.0), p).unwrap();
    assert_close(&z2, &(Float::with_val(256, pi.square_ref()) / 6u32), -248);
    let z4 = riemann_zeta(&r(64, 4.0), p).unwrap();
    let pi4 = Float::with_val(256, pi.square_ref()).square();
    assert_close(&z4, &(pi4 / 90u32), -248);
}

#[test]
fn riemann_zeta_three_matches_dirichlet_sum_with_tail() {
    // Σ_{k≤N} k^{−3} plus ∫_{N+1}^∞ ≤ tail ≤ ∫_N^∞.
    let bits = 128;
    let n = 100_000u32;
    let mut sum = Float::with_val(bits, 0);
    for k in 1..=n {
        sum += Float::with_val(bits, k).pow(-3i32);
    }
    let lo = Float::with_val(bits, &sum) + Float::with_val(bits, n + 1).pow(-2i32) / 2u32;
    let hi = Float::with_val(bits, &sum) + Float::with_val(bits, n).pow(-2i32) / 2u32;
    let z3 = riemann_zeta(&r(bits, 3.0), Precision::exact(bits)).unwrap();
    assert!(lo <= z3 && z3 <= hi);
}

#[test]
fn riemann_zeta_errors() {
    let p = Precision::exact(64);
    assert!(matches!(riemann_zeta(&r(64, 1.0), p), Err(Error::Pole { .. })));
    assert!(matches!(riemann_zeta(&r(64, 0.0), p), Err(Error::Domain { .. })));
    assert!(matches!(riemann_zeta(&r(64, -2.0), p), Err(Error::Domain { .. })));
}

#[test]
fn riemann_zeta_inside_critical_strip() {
    let bits = 200;
    let p = Precision::exact(bits);
    for s in [0.25, 0.5, 0.75] {
        let v = riemann_zeta(&r(bits, s), p).unwrap();
        let mpfr = Float::with_val(bits, s).zeta();
        assert_close(&v, &mpfr, -190);
    }
}

#[test]
fn hurwitz_examples() {
    let bits = 256;
    let p = Precision::exact(bits);
    let pi = const_pi(p);
    let two = r(bits, 2.0);
    let z = hurwitz_zeta(&two, &r(bits, 1.0), p).unwrap();
    assert_close(&z, &(Float::with_val(bits, pi.square_ref()) / 6u32), -248);
    let z_half = hurwitz_zeta(&two, &r(bits, 0.5), p).unwrap();
    assert_close(&z_half, &(Float::with_val(bits, pi.square_ref()) / 2u32), -246);
    let z32 = hurwitz_zeta(&r(bits, 3.0), &two, p).unwrap();
    let z3 = riemann_zeta(&r(bits, 3.0), p).unwrap() - 1u32;
    assert_close(&z32, &z3, -250);
    assert!(hurwitz_zeta(&r(bits, 1.0), &two, p).is_err());
    assert!(hurwitz_zeta(&two, &r(bits, 0.0), p).is_err());
}

#[test]
fn hurwitz_large_exponent_keeps_relative_accuracy() {
    // ζ(k) − 1 for large k is ≈ 2^{−k}; it must be accurate relative to
    // itself, not to 1.
    let p = Precision::exact(256);
    for k in [40u32, 300, 1500] {
        let v = zeta_int_minus_one(k, p);
        let mpfr_tail = {
            let mut acc = Float::with_val(600, 0);
            for j in 2..200u32 {
                acc += Float::with_val(600, j).pow(-(k as i32));
            }
            acc
        };
        let rel = Float::with_val(256, &v / &mpfr_tail) - 1u32;
        assert!(rel.abs() < pow2(64, -250), "k={k}");
    }
}

#[test]
fn omega_examples() {
    let bits = 256;
    let p = Precision::exact(bits);
    let g = euler_gamma(p);
    let zero = r(bits, 0.0);
    let expected = (1u32 - g.clone()) * 2u32;
    assert_close(&omega(0, &zero).unwrap(), &expected, -248);
    assert_close(&omega(1, &zero).unwrap(), &zero, -248);
    assert!(omega(0, &r(bits, 2.0)).is_err());
    assert!(omega(0, &r(bits, -2.5)).is_err());

    // Σ (2k+1)(ζ(2k+1)−1) α^{2k} = (1−γ) − ω(0, α)/2, with MPFR ζ values.
    let a = golden_alpha(p);
    let a2 = Float::with_val(bits, a.square_ref());
    let mut sum = Float::with_val(bits, 0);
    let mut pw = a2.clone();
    for k in 1..2000u32 {
        let z = Float::with_val(bits + 1000, 2 * k + 1).zeta() - 1u32;
        let t = Float::with_val(bits, z * &pw) * (2 * k + 1);
        let small = Float::with_val(64, t.abs_ref()) < pow2(64, -260);
        sum += t;
        if small {
            break;
        }
        pw *= &a2;
    }
    let oracle = (1u32 - g) - sum;
    let half_omega = omega(0, &a).unwrap() / 2u32;
    assert_close(&half_omega, &oracle, -240);
}

#[test]
fn trig_examples() {
    let bits = 256;
    let p = Precision::exact(bits);
    let pi = const_pi(p);
    let half_pi = Float::with_val(bits, &pi / 2u32);
    assert_close(&trig_closed(TrigKind::Csc, &half_pi).unwrap(), &r(bits, 1.0), -250);

    let arg = Float::with_val(bits, crate::mpreal::const_sqrt5(p) * &pi) / 2u32;
    let sec2 = trig_closed(TrigKind::SecSquared, &arg).unwrap();
    assert!(sec2 > 0);
    let cos = Float::with_val(bits, arg.cos_ref());
    assert_close(&sec2, &Float::with_val(bits, cos.square_ref()).recip(), -248);

    let x = Float::with_val(bits, &pi * r(bits, 0.3));
    let prod = trig_closed(TrigKind::Cot, &x).unwrap() * trig_closed(TrigKind::Tan, &x).unwrap();
    assert_close(&prod, &r(bits, 1.0), -250);

    assert!(matches!(trig_closed(TrigKind::Cot, &pi), Err(Error::Pole { .. })));
    assert!(matches!(trig_closed(TrigKind::Sec, &half_pi), Err(Error::Pole { .. })));
    assert!(matches!(trig_closed(TrigKind::Csc, &r(bits, 0.0)), Err(Error::Pole { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ln_gamma_agrees_with_mpfr(x in 0.01f64..60.0) {
        let bits = 192;
        let x = r(bits, x);
        let ours = ln_gamma(&x).unwrap();
        let theirs = Float::with_val(bits, x.ln_gamma_ref());
        let scale = Float::with_val(64, theirs.abs_ref()).max(&r(64, 1.0));
        let d = Float::with_val(bits, &ours - &theirs).abs();
        prop_assert!(d < scale * pow2(64, -184));
    }

    #[test]
    fn digamma_agrees_with_mpfr(x in 0.01f64..60.0) {
        let bits = 192;
        let x = r(bits, x);
        let ours = digamma(&x).unwrap();
        let theirs = Float::with_val(bits, x.digamma_ref());
        let scale = Float::with_val(64, theirs.abs_ref()).max(&r(64, 1.0));
        let d = Float::with_val(bits, &ours - &theirs).abs();
        prop_assert!(d < scale * pow2(64, -184));
    }

    #[test]
    fn riemann_zeta_agrees_with_mpfr(s in 1.05f64..80.0) {
        let bits = 192;
        let s = r(bits, s);
        let ours = riemann_zeta(&s, Precision::exact(bits)).unwrap();
        let theirs = Float::with_val(bits, s.zeta_ref());
        let d = Float::with_val(bits, &ours - &theirs).abs();
        prop_assert!(d < Float::with_val(64, theirs.abs_ref()) * pow2(64, -186));
    }

    #[test]
    fn eta_path_agrees_with_euler_maclaurin(s in 1.1f64..30.0) {
        let p = Precision::exact(192);
        let s = r(192, s);
        let a = riemann_zeta(&s, p).unwrap();
        let b = zeta_eta_continuation(&s, p).unwrap();
        prop_assert!(close(&a, &b, -184));
    }
}
