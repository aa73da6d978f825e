//! Arbitrary-precision special functions on the real line.

mod bernoulli;
mod gamma;
mod trig;
mod zeta;

pub use bernoulli::bernoulli_even;
pub use gamma::{digamma, ln_gamma, polygamma};
pub use trig::{trig_closed, TrigKind};
pub use zeta::{
    hurwitz_zeta, riemann_zeta, zeta_eta_continuation, zeta_int, zeta_int_minus_one,
};

use std::f64::consts::LN_2;

use rug::Float;

use crate::error::{Error, Result};
use crate::mpreal::{cached, pow2, Precision, Real};

/// Euler–Mascheroni constant γ, cached per precision.
///
/// Brent–McMillan: with `A₀ = −ln N`, `B₀ = 1`,
/// `B_k = B_{k−1} N²/k²`, `A_k = (A_{k−1} N²/k + B_k)/k`,
/// γ ≈ ΣA_k / ΣB_k with error O(e^{−4N}).
pub fn euler_gamma(prec: Precision) -> Real {
    let bits = prec.working();
    cached("euler_gamma", bits, || brent_mcmillan(bits))
}

fn brent_mcmillan(bits: u32) -> Real {
    let work = bits + 32;
    let n = ((work as f64 + 8.0) * LN_2 / 4.0).ceil() as u64 + 1;
    let n2 = Float::with_val(work, n * n);
    let mut a = -Float::with_val(work, n).ln();
    let mut b = Float::with_val(work, 1);
    let mut u = a.clone();
    let mut v = b.clone();
    let small = pow2(64, -(work as i32) - 8);
    let mut k: u64 = 1;
    loop {
        b *= &n2;
        b /= k * k;
        a *= &n2;
        a /= k;
        a += &b;
        a /= k;
        u += &a;
        v += &b;
        if k > n {
            let rel_b = Float::with_val(64, &b / &v).abs();
            let rel_a = Float::with_val(64, &a / &u).abs();
            if rel_b < small && rel_a < small {
                break;
            }
        }
        k += 1;
    }
    Float::with_val(bits, u / v)
}

/// `ω(m, x) = x^m (ψ(x+2) + x ψ′(x+2) + ψ(2−x) − x ψ′(2−x))` for |x| < 2.
pub fn omega(m: u32, x: &Real) -> Result<Real> {
    if !(Float::with_val(x.prec(), x.abs_ref()) < 2) {
        return Err(Error::domain("omega", "|x| < 2"));
    }
    let bits = x.prec();
    let work = bits + 16;
    let xw = Float::with_val(work, x);
    let plus = Float::with_val(work, &xw + 2u32);
    let minus = Float::with_val(work, 2u32 - &xw);
    let inner = digamma(&plus)? + Float::with_val(work, &xw * polygamma(1, &plus)?)
        + digamma(&minus)?
        - Float::with_val(work, &xw * polygamma(1, &minus)?);
    let scale = if m == 0 {
        Float::with_val(work, 1)
    } else {
        crate::mpreal::powi(&xw, m as i64)
    };
    Ok(Float::with_val(bits, inner * scale))
}

#[cfg(test)]
mod tests;
