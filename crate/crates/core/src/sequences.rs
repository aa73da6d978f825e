//! Exact Fibonacci and Lucas numbers over signed indices.
//!
//! Non-negative indices use fast doubling on big integers; negative indices
//! are obtained by reflecting the non-negative result
//! (`F₋ₘ = (−1)^{m−1} Fₘ`, `L₋ₘ = (−1)^m Lₘ`).

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::mpreal::{const_sqrt5, golden_alpha, golden_beta, powi, Precision, Real};

/// Signed sequence index.
pub type SeqIndex = i64;

/// Exact sequence value.
pub type SeqValue = Integer;

/// Indices up to this use plain iteration; beyond it, fast doubling.
const ITERATIVE_LIMIT: u64 = 64;

/// Returns `(F_n, F_{n+1})` for `n ≥ 0`.
fn fib_pair(n: u64) -> (Integer, Integer) {
    if n <= ITERATIVE_LIMIT {
        return fib_pair_iterative(n);
    }
    fib_pair_doubling(n)
}

fn fib_pair_iterative(n: u64) -> (Integer, Integer) {
    let (mut a, mut b) = (Integer::from(0), Integer::from(1));
    for _ in 0..n {
        let next = Integer::from(&a + &b);
        a = std::mem::replace(&mut b, next);
    }
    (a, b)
}

// F(2k)   = F(k)·(2F(k+1) − F(k))
// F(2k+1) = F(k)² + F(k+1)²
fn fib_pair_doubling(n: u64) -> (Integer, Integer) {
    let (mut a, mut b) = (Integer::from(0), Integer::from(1));
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let two_b_minus_a = Integer::from(&b << 1u32) - &a;
        let f2k = Integer::from(&a * &two_b_minus_a);
        let f2k1 = Integer::from(a.square_ref()) + Integer::from(b.square_ref());
        if (n >> bit) & 1 == 1 {
            b = Integer::from(&f2k + &f2k1);
            a = f2k1;
        } else {
            a = f2k;
            b = f2k1;
        }
    }
    (a, b)
}

fn reflect_sign(value: &mut Integer, negate: bool) {
    if negate {
        *value = -std::mem::take(value);
    }
}

/// Fibonacci number `F_n` for any signed `n`.
pub fn fib(n: SeqIndex) -> SeqValue {
    let m = n.unsigned_abs();
    let (mut f, _) = fib_pair(m);
    // F₋ₘ = (−1)^{m−1} Fₘ: negative exactly when m is even.
    reflect_sign(&mut f, n < 0 && m.is_multiple_of(2));
    f
}

/// Lucas number `L_n` for any signed `n`, via `L_n = 2F_{n+1} − F_n`.
pub fn lucas(n: SeqIndex) -> SeqValue {
    let m = n.unsigned_abs();
    let (f, f1) = fib_pair(m);
    let mut l = Integer::from(&f1 << 1u32) - f;
    // L₋ₘ = (−1)^m Lₘ.
    reflect_sign(&mut l, n < 0 && m % 2 == 1);
    l
}

/// `(αⁿ − βⁿ)/(α − β)` evaluated in floating point.
pub fn binet_fib(n: SeqIndex, prec: Precision) -> Real {
    let bits = prec.working();
    let diff = powi(&golden_alpha(prec), n) - powi(&golden_beta(prec), n);
    Float::with_val(bits, diff / const_sqrt5(prec))
}

/// `αⁿ + βⁿ` evaluated in floating point.
pub fn binet_lucas(n: SeqIndex, prec: Precision) -> Real {
    let bits = prec.working();
    Float::with_val(bits, powi(&golden_alpha(prec), n) + powi(&golden_beta(prec), n))
}

fn parity_sign(exp: i64) -> i32 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn require(cond: bool, op: &'static str, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(op, constraint))
    }
}

/// `F_n² + (−1)^{n+m−1} F_m²`, which equals `F_{n−m} F_{n+m}`.
pub fn id_catalan_like(n: SeqIndex, m: SeqIndex) -> Result<SeqValue> {
    require(m >= 1 && n > m, "id_catalan_like", "n > m >= 1")?;
    let fm2 = Integer::from(fib(m).square_ref());
    let fn2 = Integer::from(fib(n).square_ref());
    Ok(fn2 + fm2 * parity_sign(n + m - 1))
}

/// `F_{n+m} + (−1)^m F_{n−m}`, which equals `L_m F_n`.
pub fn id_lucas_fib(n: SeqIndex, m: SeqIndex) -> Result<SeqValue> {
    require(m >= 1 && n >= m, "id_lucas_fib", "n >= m >= 1")?;
    Ok(fib(n + m) + fib(n - m) * parity_sign(m))
}

/// `L_n F_m + F_n L_m`, which equals `2F_{n+m}`.
pub fn id_double(n: SeqIndex, m: SeqIndex) -> Result<SeqValue> {
    require(m >= 1 && n >= 1, "id_double", "n >= 1 and m >= 1")?;
    Ok(lucas(n) * fib(m) + fib(n) * lucas(m))
}

/// `L_{n+m} + (−1)^m L_{n−m}`, which equals `L_m L_n`.
pub fn id_lucas_lucas(n: SeqIndex, m: SeqIndex) -> Result<SeqValue> {
    require(m >= 1 && n >= m, "id_lucas_lucas", "n >= m >= 1")?;
    Ok(lucas(n + m) + lucas(n - m) * parity_sign(m))
}

/// `L_{n+m} + (−1)^{m−1} L_{n−m}`, which equals `5 F_m F_n`.
pub fn id_five_fib(n: SeqIndex, m: SeqIndex) -> Result<SeqValue> {
    require(m >= 1 && n >= m, "id_five_fib", "n >= m >= 1")?;
    Ok(lucas(n + m) + lucas(n - m) * parity_sign(m - 1))
}
