//! Riemann and Hurwitz zeta functions for real arguments.
//!
//! The reference path is Euler–Maclaurin summation of `Σ (n + a)^{−s}`: a
//! direct head, the integral and half-term corrections, and Bernoulli
//! corrections until they drop below the working precision. The
//! alternating (eta) series with Borwein's Chebyshev weights is kept as an
//! independent second path for `ζ(s)`, and is the only path for `0 < s < 1`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::bernoulli::bernoulli_floats;
use super::gamma::asymptotic_threshold;
use crate::error::{Error, Result};
use crate::mpreal::{Precision, Real};

const INTERNAL_GUARD: u32 = 32;

/// Exponent `s`, kept as a machine integer when possible for faster powers.
enum Exponent<'a> {
    Int(i32),
    Real(&'a Real),
}

impl Exponent<'_> {
    fn of(s: &Real) -> Exponent<'_> {
        if s.is_integer() {
            if let Some(i) = s.to_i32_saturating().filter(|i| i.abs() < i32::MAX) {
                return Exponent::Int(i);
            }
        }
        Exponent::Real(s)
    }

    /// `base^{−s}`
    fn neg_pow(&self, base: &Real, bits: u32) -> Real {
        match self {
            Exponent::Int(i) => Float::with_val(bits, base.pow(-i)),
            Exponent::Real(s) => {
                let neg = Float::with_val(bits, -*s);
                Float::with_val(bits, base.pow(&neg))
            }
        }
    }
}

/// log₂ of an upper bound for `Σ_{n≥0} (x + n)^{−s}`, i.e. `x^{−s}(1 + x/(s−1))`.
fn log2_tail_bound(x: f64, s: f64) -> f64 {
    -s * x.log2() + (1.0 + x / (s - 1.0)).log2()
}

/// ζ(s, a) for real s > 1 and a > 0 at `bits` of output precision.
pub(crate) fn hurwitz_zeta_bits(s: &Real, a: &Real, bits: u32) -> Result<Real> {
    if !(*s > 1) {
        return Err(Error::domain("hurwitz_zeta", "s > 1"));
    }
    if !(*a > 0) {
        return Err(Error::domain("hurwitz_zeta", "a > 0"));
    }
    let work = bits + INTERNAL_GUARD;
    let s_work = Float::with_val(work, s);
    let s_f = s.to_f64();
    let exp = Exponent::of(&s_work);

    let mut threshold = asymptotic_threshold(work);
    loop {
        if let Some(v) = hurwitz_attempt(&s_work, s_f, &exp, a, work, threshold) {
            return Ok(Float::with_val(bits, v));
        }
        threshold *= 2.0;
    }
}

/// One Euler–Maclaurin attempt with the head summed up to `threshold`.
/// Returns `None` if the Bernoulli corrections start growing before they
/// reach the working precision.
fn hurwitz_attempt(
    s: &Real,
    s_f: f64,
    exp: &Exponent<'_>,
    a: &Real,
    work: u32,
    threshold: f64,
) -> Option<Real> {
    let mut x = Float::with_val(work, a);
    let mut sum = Float::with_val(work, 0);
    while x.to_f64() < threshold {
        sum += exp.neg_pow(&x, work);
        x += 1u32;
        // Everything that is left is below the working precision.
        let log2_sum = sum.to_f64().log2();
        if log2_tail_bound(x.to_f64(), s_f) < log2_sum - work as f64 - 2.0 {
            return Some(sum);
        }
    }

    // Σ_{n≥0} (x+n)^{−s} = x^{1−s}/(s−1) + x^{−s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j−1} x^{−s−2j+1} + R
    let xs = exp.neg_pow(&x, work);
    let s_minus_1 = Float::with_val(work, s - 1u32);
    let mut tail = Float::with_val(work, &x * &xs) / &s_minus_1 + Float::with_val(work, &xs / 2u32);
    let x2 = Float::with_val(work, x.square_ref());
    let mut factor = Float::with_val(work, s * &xs) / &x / 2u32;
    let eps_log2 = -(work as i64);
    let max_terms = (3.0 * threshold + s_f).ceil() as usize;
    let bern = bernoulli_floats(work, max_terms);
    let mut prev_mag = f64::INFINITY;
    for (i, b) in bern.iter().take(max_terms).enumerate() {
        let j = (i + 1) as u32;
        let term = Float::with_val(work, b * &factor);
        let mag = term.to_f64().abs();
        if mag > prev_mag {
            return None;
        }
        prev_mag = mag;
        tail += &term;
        let total = Float::with_val(work, &sum + &tail);
        if term.is_zero() || term.get_exp().unwrap_or(i32::MIN) as i64 <= total.get_exp()? as i64 + eps_log2 {
            return Some(total);
        }
        // (s+2j−1)(s+2j) / ((2j+1)(2j+2)) / x²
        let num = Float::with_val(work, s + (2 * j - 1)) * Float::with_val(work, s + 2 * j);
        factor *= num;
        factor /= (2 * j + 1) * (2 * j + 2);
        factor /= &x2;
    }
    None
}

/// Hurwitz zeta ζ(s, a) for real s > 1 and a > 0.
pub fn hurwitz_zeta(s: &Real, a: &Real, prec: Precision) -> Result<Real> {
    hurwitz_zeta_bits(s, a, prec.working())
}

/// Riemann zeta ζ(s) for real s > 0, s ≠ 1.
///
/// Uses Euler–Maclaurin for s > 1 and the eta continuation for 0 < s < 1.
pub fn riemann_zeta(s: &Real, prec: Precision) -> Result<Real> {
    if *s == 1 {
        return Err(Error::pole("riemann_zeta", 1));
    }
    if !(*s > 0) {
        return Err(Error::domain("riemann_zeta", "s > 0"));
    }
    if *s > 1 {
        let one = Float::with_val(prec.working(), 1);
        hurwitz_zeta(s, &one, prec)
    } else {
        zeta_eta_continuation(s, prec)
    }
}

/// ζ(s) = (1 − 2^{1−s})^{−1} Σ (−1)^{k+1} k^{−s}, the alternating series
/// accelerated with Borwein's weights (error below 3·(3+√8)^{−n}/|Γ(s)|).
pub fn zeta_eta_continuation(s: &Real, prec: Precision) -> Result<Real> {
    if *s == 1 {
        return Err(Error::pole("zeta_eta_continuation", 1));
    }
    if !(*s > 0) {
        return Err(Error::domain("zeta_eta_continuation", "s > 0"));
    }
    let bits = prec.working();
    let work = bits + INTERNAL_GUARD;
    let n = ((work as f64 + 4.0) / (3.0 + 8f64.sqrt()).log2()).ceil() as u32 + 1;

    // d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!), built from the term ratio.
    let mut d = Vec::with_capacity(n as usize + 1);
    let mut term = Rational::from(1);
    let mut acc = Rational::new();
    for i in 0..=n {
        acc += &term;
        d.push(Float::with_val(work, &acc));
        let ratio = Rational::from((
            Integer::from(4u32) * (n + i) * (n - i),
            Integer::from(2 * i + 1) * (2 * i + 2),
        ));
        term *= ratio;
    }
    let s_work = Float::with_val(work, s);
    let exp = Exponent::of(&s_work);
    let dn = d[n as usize].clone();
    let mut sum = Float::with_val(work, 0);
    for k in 0..n {
        let base = Float::with_val(work, k + 1);
        let t = Float::with_val(work, &d[k as usize] - &dn) * exp.neg_pow(&base, work);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    let eta = -sum / dn;
    let one_minus_s = Float::with_val(work, 1u32 - &s_work);
    let two_pow = Float::with_val(work, Float::with_val(work, 2).pow(&one_minus_s));
    let factor = 1u32 - two_pow;
    Ok(Float::with_val(bits, eta / factor))
}

type IntZetaKey = (bool, u32, u32);

fn int_zeta_cache() -> &'static RwLock<HashMap<IntZetaKey, Real>> {
    static CACHE: OnceLock<RwLock<HashMap<IntZetaKey, Real>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached_int_zeta(minus_one: bool, k: u32, bits: u32) -> Real {
    let key = (minus_one, k, bits);
    if let Some(v) = int_zeta_cache().read().expect("zeta cache poisoned").get(&key) {
        return v.clone();
    }
    let s = Float::with_val(bits, k);
    let a = Float::with_val(bits, if minus_one { 2 } else { 1 });
    let v = hurwitz_zeta_bits(&s, &a, bits).expect("integer zeta argument in domain");
    int_zeta_cache()
        .write()
        .expect("zeta cache poisoned")
        .entry(key)
        .or_insert(v)
        .clone()
}

/// ζ(k) for an integer k ≥ 2, cached per (k, precision).
pub fn zeta_int(k: u32, prec: Precision) -> Real {
    assert!(k >= 2, "zeta_int requires k >= 2");
    cached_int_zeta(false, k, prec.working())
}

/// ζ(k) − 1 = ζ(k, 2) for an integer k ≥ 2, computed with full relative
/// accuracy (no cancellation against 1) and cached.
pub fn zeta_int_minus_one(k: u32, prec: Precision) -> Real {
    assert!(k >= 2, "zeta_int_minus_one requires k >= 2");
    cached_int_zeta(true, k, prec.working())
}
