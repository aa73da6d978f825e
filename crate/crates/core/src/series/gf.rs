//! Generating functions with zeta-valued coefficients: each closed form
//! next to the series that defines it.
//!
//! The closed forms are evaluated at `z.prec()` bits. The `*_series`
//! builders return the defining power series as a [`SeriesSpec`] with a
//! certified geometric tail, so the two sides can be compared directly.

use std::sync::Arc;

use rug::Float;

use super::{GeometricEnvelope, SeriesSpec, TailRule, ZETA_MINUS_ONE_ENVELOPE};
use crate::error::{Error, Result};
use crate::mpreal::{const_pi, powi, Precision, Real};
use crate::specfun::{
    digamma, euler_gamma, hurwitz_zeta, ln_gamma, trig_closed, zeta_int_minus_one, TrigKind,
};

fn prec_of(z: &Real) -> Precision {
    Precision::exact(z.prec())
}

fn abs_f64(z: &Real) -> f64 {
    z.to_f64().abs()
}

fn require_radius(op: &'static str, z: &Real, radius: f64) -> Result<()> {
    if abs_f64(z) < radius {
        Ok(())
    } else {
        Err(Error::domain(op, format!("|z| < {radius}")))
    }
}

/// `Σ_{k≥1} (ζ(2k) − 1) z^{2k−1} = −(π/2) cot πz + (3z² − 1)/(2z(z² − 1))`.
pub fn gf_even_zeta(z: &Real) -> Result<Real> {
    require_radius("gf_even_zeta", z, 2.0)?;
    let bits = z.prec();
    let pi = const_pi(prec_of(z));
    let cot = trig_closed(TrigKind::Cot, &Float::with_val(bits, &pi * z))?;
    let z2 = Float::with_val(bits, z.square_ref());
    let num = Float::with_val(bits, &z2 * 3u32) - 1u32;
    let den = Float::with_val(bits, z * 2u32) * (z2 - 1u32);
    Ok(Float::with_val(bits, -(pi * cot) / 2u32) + num / den)
}

/// `Σ_{k≥1} (2k − 1)(ζ(2k) − 1) z^{2k} = ½(π² z² csc² πz − (3z⁴ + 1)/(z² − 1)²)`.
pub fn gf_even_zeta_deriv(z: &Real) -> Result<Real> {
    require_radius("gf_even_zeta_deriv", z, 2.0)?;
    let bits = z.prec();
    if z.is_zero() {
        return Ok(Float::with_val(bits, 0));
    }
    let pi = const_pi(prec_of(z));
    let csc2 = trig_closed(TrigKind::CscSquared, &Float::with_val(bits, &pi * z))?;
    let z2 = Float::with_val(bits, z.square_ref());
    let lead = Float::with_val(bits, pi.square_ref()) * &z2 * csc2;
    let num = Float::with_val(bits, z2.square_ref()) * 3u32 + 1u32;
    let den = Float::with_val(bits, &z2 - 1u32).square();
    Ok((lead - num / den) / 2u32)
}

/// `Σ_{k≥2} (ζ(k) − 1) z^k / k = (1 − γ)z + lnΓ(2 − z)`.
pub fn gf_log_gamma(z: &Real) -> Result<Real> {
    require_radius("gf_log_gamma", z, 2.0)?;
    let bits = z.prec();
    let g = euler_gamma(prec_of(z));
    let lg = ln_gamma(&Float::with_val(bits, 2u32 - z))?;
    Ok(Float::with_val(bits, (1u32 - g) * z) + lg)
}

/// `Σ_{k≥2} (k + 1)(ζ(k) − 1) z^k / k = 2(1 − γ)z + lnΓ(2 − z) − z ψ(2 − z)`.
pub fn gf_log_gamma_deriv(z: &Real) -> Result<Real> {
    require_radius("gf_log_gamma_deriv", z, 2.0)?;
    let bits = z.prec();
    let g = euler_gamma(prec_of(z));
    let w = Float::with_val(bits, 2u32 - z);
    let lead = Float::with_val(bits, (1u32 - g) * z) * 2u32;
    Ok(lead + ln_gamma(&w)? - Float::with_val(bits, z * digamma(&w)?))
}

/// `Σ_{k≥1} (ζ(2k + 1) − 1) z^{2k} = (1 − γ) − ½(ψ(2 + z) + ψ(2 − z))`.
pub fn gf_odd_zeta(z: &Real) -> Result<Real> {
    require_radius("gf_odd_zeta", z, 2.0)?;
    let bits = z.prec();
    let g = euler_gamma(prec_of(z));
    let plus = digamma(&Float::with_val(bits, z + 2u32))?;
    let minus = digamma(&Float::with_val(bits, 2u32 - z))?;
    Ok((1u32 - g) - (plus + minus) / 2u32)
}

fn require_hurwitz(op: &'static str, z: &Real, a: &Real) -> Result<()> {
    if !(*a > 0) {
        return Err(Error::domain(op, "a > 0"));
    }
    if !(Float::with_val(z.prec(), z.abs_ref()) < *a) {
        return Err(Error::domain(op, "|z| < |a|"));
    }
    Ok(())
}

/// `Σ_{k≥2} ζ(k, a) z^k / k = lnΓ(a − z) − lnΓ(a) + z ψ(a)`.
pub fn gf_hurwitz_log(z: &Real, a: &Real) -> Result<Real> {
    require_hurwitz("gf_hurwitz_log", z, a)?;
    let bits = z.prec().max(a.prec());
    let a = Float::with_val(bits, a);
    let lg_shift = ln_gamma(&Float::with_val(bits, &a - z))?;
    Ok(lg_shift - ln_gamma(&a)? + Float::with_val(bits, z * digamma(&a)?))
}

/// `Σ_{k≥1} ζ(2k, a) z^{2k} / k = lnΓ(a + z) + lnΓ(a − z) − 2 lnΓ(a)`.
pub fn gf_hurwitz_even(z: &Real, a: &Real) -> Result<Real> {
    require_hurwitz("gf_hurwitz_even", z, a)?;
    let bits = z.prec().max(a.prec());
    let a = Float::with_val(bits, a);
    let plus = ln_gamma(&Float::with_val(bits, &a + z))?;
    let minus = ln_gamma(&Float::with_val(bits, &a - z))?;
    Ok(plus + minus - ln_gamma(&a)? * 2u32)
}

/// `Σ_{k≥1} ζ(2k + 1, a) z^{2k+1} / (2k + 1) = ½(lnΓ(a − z) − lnΓ(a + z)) + z ψ(a)`.
pub fn gf_hurwitz_odd(z: &Real, a: &Real) -> Result<Real> {
    require_hurwitz("gf_hurwitz_odd", z, a)?;
    let bits = z.prec().max(a.prec());
    let a = Float::with_val(bits, a);
    let plus = ln_gamma(&Float::with_val(bits, &a + z))?;
    let minus = ln_gamma(&Float::with_val(bits, &a - z))?;
    Ok((minus - plus) / 2u32 + Float::with_val(bits, z * digamma(&a)?))
}

// Defining series.

fn geometric(coeff: f64, degree: u32, ratio: f64) -> TailRule {
    TailRule::Geometric(GeometricEnvelope::new(coeff, degree, ratio))
}

/// `Σ_{k≥1} (ζ(2k) − 1) z^{2k−1}`; `|term| ≤ (3/|z|)(z²/4)^k`.
pub fn gf_even_zeta_series(z: &Real) -> Result<SeriesSpec> {
    require_radius("gf_even_zeta_series", z, 2.0)?;
    let bits = z.prec();
    let az = abs_f64(z);
    let coeff = if az == 0.0 { 0.0 } else { ZETA_MINUS_ONE_ENVELOPE / az };
    let z = z.clone();
    let p = prec_of(&z);
    Ok(SeriesSpec::new(
        bits,
        1,
        geometric(coeff, 0, az * az / 4.0),
        Arc::new(move |k| {
            let zeta = zeta_int_minus_one(2 * k as u32, p);
            Float::with_val(bits, zeta * powi(&z, 2 * k as i64 - 1))
        }),
    ))
}

/// `Σ_{k≥1} (2k − 1)(ζ(2k) − 1) z^{2k}`; `|term| ≤ 6k(z²/4)^k`.
pub fn gf_even_zeta_deriv_series(z: &Real) -> Result<SeriesSpec> {
    require_radius("gf_even_zeta_deriv_series", z, 2.0)?;
    let bits = z.prec();
    let az = abs_f64(z);
    let z = z.clone();
    let p = prec_of(&z);
    Ok(SeriesSpec::new(
        bits,
        1,
        geometric(2.0 * ZETA_MINUS_ONE_ENVELOPE, 1, az * az / 4.0),
        Arc::new(move |k| {
            let zeta = zeta_int_minus_one(2 * k as u32, p);
            Float::with_val(bits, zeta * powi(&z, 2 * k as i64)) * (2 * k - 1)
        }),
    ))
}

/// `Σ_{k≥2} (ζ(k) − 1) z^k / k`; `|term| ≤ 1.5(|z|/2)^k`.
pub fn gf_log_gamma_series(z: &Real) -> Result<SeriesSpec> {
    require_radius("gf_log_gamma_series", z, 2.0)?;
    let bits = z.prec();
    let az = abs_f64(z);
    let z = z.clone();
    let p = prec_of(&z);
    Ok(SeriesSpec::new(
        bits,
        2,
        geometric(ZETA_MINUS_ONE_ENVELOPE / 2.0, 0, az / 2.0),
        Arc::new(move |k| {
            let zeta = zeta_int_minus_one(k as u32, p);
            Float::with_val(bits, zeta * powi(&z, k as i64)) / k
        }),
    ))
}

/// `Σ_{k≥2} (k + 1)(ζ(k) − 1) z^k / k`; `|term| ≤ 4.5(|z|/2)^k`.
pub fn gf_log_gamma_deriv_series(z: &Real) -> Result<SeriesSpec> {
    require_radius("gf_log_gamma_deriv_series", z, 2.0)?;
    let bits = z.prec();
    let az = abs_f64(z);
    let z = z.clone();
    let p = prec_of(&z);
    Ok(SeriesSpec::new(
        bits,
        2,
        geometric(1.5 * ZETA_MINUS_ONE_ENVELOPE, 0, az / 2.0),
        Arc::new(move |k| {
            let zeta = zeta_int_minus_one(k as u32, p);
            Float::with_val(bits, zeta * powi(&z, k as i64)) * (k + 1) / k
        }),
    ))
}

/// `Σ_{k≥1} (ζ(2k + 1) − 1) z^{2k}`; `|term| ≤ 1.5(z²/4)^k`.
pub fn gf_odd_zeta_series(z: &Real) -> Result<SeriesSpec> {
    require_radius("gf_odd_zeta_series", z, 2.0)?;
    let bits = z.prec();
    let az = abs_f64(z);
    let z = z.clone();
    let p = prec_of(&z);
    Ok(SeriesSpec::new(
        bits,
        1,
        geometric(ZETA_MINUS_ONE_ENVELOPE / 2.0, 0, az * az / 4.0),
        Arc::new(move |k| {
            let zeta = zeta_int_minus_one(2 * k as u32 + 1, p);
            Float::with_val(bits, zeta * powi(&z, 2 * k as i64))
        }),
    ))
}

// ζ(k, a) ≤ a^{−k}(1 + a/(k − 1)) ≤ (1 + a)·a^{−k} for k ≥ 2.
fn hurwitz_term(k: u64, a: &Real, p: Precision) -> Real {
    let s = Float::with_val(p.working(), k);
    hurwitz_zeta(&s, a, p).expect("k >= 2 and a > 0")
}

/// `Σ_{k≥2} ζ(k, a) z^k / k`; `|term| ≤ ((1 + a)/2)(|z|/a)^k`.
pub fn gf_hurwitz_log_series(z: &Real, a: &Real) -> Result<SeriesSpec> {
    require_hurwitz("gf_hurwitz_log_series", z, a)?;
    let bits = z.prec().max(a.prec());
    let (az, af) = (abs_f64(z), a.to_f64());
    let (z, a) = (Float::with_val(bits, z), Float::with_val(bits, a));
    let p = Precision::exact(bits);
    Ok(SeriesSpec::new(
        bits,
        2,
        geometric((1.0 + af) / 2.0, 0, az / af),
        Arc::new(move |k| Float::with_val(bits, hurwitz_term(k, &a, p) * powi(&z, k as i64)) / k),
    ))
}

/// `Σ_{k≥1} ζ(2k, a) z^{2k} / k`; `|term| ≤ (1 + a)(z²/a²)^k`.
pub fn gf_hurwitz_even_series(z: &Real, a: &Real) -> Result<SeriesSpec> {
    require_hurwitz("gf_hurwitz_even_series", z, a)?;
    let bits = z.prec().max(a.prec());
    let (az, af) = (abs_f64(z), a.to_f64());
    let (z, a) = (Float::with_val(bits, z), Float::with_val(bits, a));
    let p = Precision::exact(bits);
    Ok(SeriesSpec::new(
        bits,
        1,
        geometric(1.0 + af, 0, (az / af).powi(2)),
        Arc::new(move |k| {
            Float::with_val(bits, hurwitz_term(2 * k, &a, p) * powi(&z, 2 * k as i64)) / k
        }),
    ))
}

/// `Σ_{k≥1} ζ(2k + 1, a) z^{2k+1} / (2k + 1)`; `|term| ≤ ((1 + a)|z|/(3a))(z²/a²)^k`.
pub fn gf_hurwitz_odd_series(z: &Real, a: &Real) -> Result<SeriesSpec> {
    require_hurwitz("gf_hurwitz_odd_series", z, a)?;
    let bits = z.prec().max(a.prec());
    let (az, af) = (abs_f64(z), a.to_f64());
    let (z, a) = (Float::with_val(bits, z), Float::with_val(bits, a));
    let p = Precision::exact(bits);
    Ok(SeriesSpec::new(
        bits,
        1,
        geometric((1.0 + af) * az / (3.0 * af), 0, (az / af).powi(2)),
        Arc::new(move |k| {
            let t = hurwitz_term(2 * k + 1, &a, p) * powi(&z, 2 * k as i64 + 1);
            Float::with_val(bits, t) / (2 * k + 1)
        }),
    ))
}
