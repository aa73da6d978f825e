//! lnΓ, ψ and ψ⁽ᵐ⁾ on the positive real axis.
//!
//! Both lnΓ and ψ shift the argument upward with the recurrence until it is
//! large enough for the Stirling/asymptotic series to reach the working
//! precision before its terms start to grow, then sum that series while the
//! terms exceed the target error. Polygamma of order `m ≥ 1` is routed
//! through the Hurwitz zeta function.

use std::f64::consts::{LN_2, PI};

use rug::float::Constant;
use rug::Float;

use super::bernoulli::bernoulli_floats;
use super::zeta::hurwitz_zeta_bits;
use crate::error::{Error, Result};
use crate::mpreal::{pow2, Real};

/// Extra bits carried internally by the gamma-family routines.
const INTERNAL_GUARD: u32 = 32;

/// Smallest argument at which the asymptotic series is used at `bits`.
pub(crate) fn asymptotic_threshold(bits: u32) -> f64 {
    (bits as f64 * LN_2 / (2.0 * PI)).ceil() + 2.0
}

fn is_nonpositive_integer(x: &Real) -> bool {
    *x <= 0 && x.is_integer()
}

/// Upward shift count so that `x + shift ≥ threshold`.
fn shift_count(x: &Real, threshold: f64) -> u32 {
    let xf = x.to_f64();
    if xf >= threshold {
        0
    } else {
        (threshold - xf).ceil() as u32
    }
}

/// lnΓ(x) for x > 0, rounded to `x.prec()` bits.
pub fn ln_gamma(x: &Real) -> Result<Real> {
    if *x <= 0 {
        return Err(Error::pole("ln_gamma", x.to_f64()));
    }
    let out_bits = x.prec();
    let work = out_bits + INTERNAL_GUARD;
    let x = Float::with_val(work, x);

    let shift = shift_count(&x, asymptotic_threshold(work));
    let mut product = Float::with_val(work, 1);
    let mut y = x.clone();
    for _ in 0..shift {
        product *= &y;
        y += 1u32;
    }

    // (y − ½) ln y − y + ½ ln 2π + Σ B_{2k} / (2k(2k−1) y^{2k−1})
    let ln_y = Float::with_val(work, y.ln_ref());
    let half_ln_2pi = {
        let two_pi = Float::with_val(work, Constant::Pi) * 2u32;
        two_pi.ln() / 2u32
    };
    let mut acc = Float::with_val(work, &y - 0.5f64) * &ln_y - &y + half_ln_2pi;

    let eps = pow2(64, -(work as i32));
    let y2 = Float::with_val(work, y.square_ref());
    let mut y_pow = y.clone();
    let bern = bernoulli_floats(work, max_terms(&y));
    for (i, b) in bern.iter().enumerate() {
        let k = (i + 1) as u64;
        let term = Float::with_val(work, b / &y_pow) / (2 * k * (2 * k - 1));
        acc += &term;
        if term.abs() < eps {
            break;
        }
        y_pow *= &y2;
    }

    if shift > 0 {
        acc -= product.ln();
    }
    Ok(Float::with_val(out_bits, acc))
}

// The asymptotic series terms keep shrinking while k < π·y.
fn max_terms(y: &Real) -> usize {
    (PI * y.to_f64()).ceil() as usize + 2
}

/// Digamma ψ(x) = Γ′(x)/Γ(x) for x > 0, rounded to `x.prec()` bits.
pub fn digamma(x: &Real) -> Result<Real> {
    if is_nonpositive_integer(x) {
        return Err(Error::pole("digamma", x.to_f64()));
    }
    if *x < 0 {
        return Err(Error::domain("digamma", "x > 0"));
    }
    let out_bits = x.prec();
    let work = out_bits + INTERNAL_GUARD;
    let x = Float::with_val(work, x);

    let shift = shift_count(&x, asymptotic_threshold(work));
    let mut harmonic = Float::with_val(work, 0);
    let mut y = x;
    for _ in 0..shift {
        harmonic += Float::with_val(work, y.recip_ref());
        y += 1u32;
    }

    // ln y − 1/(2y) − Σ B_{2k} / (2k y^{2k})
    let mut acc = Float::with_val(work, y.ln_ref()) - Float::with_val(work, y.recip_ref()) / 2u32;
    let eps = pow2(64, -(work as i32));
    let y2 = Float::with_val(work, y.square_ref());
    let mut y_pow = y2.clone();
    let bern = bernoulli_floats(work, max_terms(&y));
    for (i, b) in bern.iter().enumerate() {
        let k = (i + 1) as u64;
        let term = Float::with_val(work, b / &y_pow) / (2 * k);
        acc -= &term;
        if term.abs() < eps {
            break;
        }
        y_pow *= &y2;
    }
    acc -= harmonic;
    Ok(Float::with_val(out_bits, acc))
}

/// Polygamma ψ⁽ᵐ⁾(x) for x > 0.
///
/// For `m ≥ 1` this is `(−1)^{m+1} m! ζ(m+1, x)`.
pub fn polygamma(m: u32, x: &Real) -> Result<Real> {
    if m == 0 {
        return digamma(x);
    }
    if is_nonpositive_integer(x) {
        return Err(Error::pole("polygamma", x.to_f64()));
    }
    if *x < 0 {
        return Err(Error::domain("polygamma", "x > 0"));
    }
    let bits = x.prec();
    let s = Float::with_val(bits, m + 1);
    let zeta = hurwitz_zeta_bits(&s, x, bits + 8)?;
    let factorial = Float::with_val(bits + 8, rug::Integer::from(rug::Integer::factorial(m)));
    let mut v = Float::with_val(bits, zeta * factorial);
    if m.is_multiple_of(2) {
        v = -v;
    }
    Ok(v)
}
