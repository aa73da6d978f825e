//! Arbitrary-precision real numbers and the constants every closed form
//! needs.
//!
//! [`Real`] is an MPFR-backed binary float (via `rug`). Each value carries
//! its own significand precision and all arithmetic rounds to nearest.
//! Transcendental primitives (`ln`, `exp`, `sin`, `cos`, `tan`, `sqrt`,
//! `pow`, `atan`) are correctly rounded by MPFR, which satisfies the 2 ulp
//! faithfulness contract the rest of the crate relies on.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Float};

use crate::error::{Error, Result};

/// Arbitrary-precision real number. Immutable by convention; `Send + Sync`.
pub type Real = Float;

/// Target precision plus the extra working bits used to absorb cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    pub bits: u32,
    pub guard_bits: u32,
}

impl Precision {
    pub const MIN_BITS: u32 = 64;
    pub const DEFAULT_GUARD_BITS: u32 = 64;

    /// `bits` target bits with the default 64 guard bits.
    ///
    /// Panics if `bits < 64`; use [`Precision::try_new`] for untrusted input.
    pub fn new(bits: u32) -> Self {
        Self::try_new(bits, Self::DEFAULT_GUARD_BITS).expect("precision below 64 bits")
    }

    /// `bits` target bits with no guard bits: results are produced at exactly
    /// `bits` of significand.
    pub fn exact(bits: u32) -> Self {
        Self::try_new(bits, 0).expect("precision below 64 bits")
    }

    pub fn try_new(bits: u32, guard_bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least {} bits, got {bits}",
                Self::MIN_BITS
            )));
        }
        Ok(Self { bits, guard_bits })
    }

    /// Significand bits used for computation.
    pub fn working(&self) -> u32 {
        self.bits + self.guard_bits
    }
}

/// Builds a [`Real`] of `bits` precision from anything MPFR can assign from.
pub fn real<T>(bits: u32, value: T) -> Real
where
    Float: Assign<T>,
{
    Float::with_val(bits, value)
}

/// `2^exp` at the given precision.
pub fn pow2(bits: u32, exp: i32) -> Real {
    Float::with_val(bits, 1) << exp
}

type ConstKey = (&'static str, u32);

fn constant_cache() -> &'static RwLock<HashMap<ConstKey, Real>> {
    static CACHE: OnceLock<RwLock<HashMap<ConstKey, Real>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Returns the cached value of `name` at `bits`, computing it on first use.
///
/// Concurrent first use may compute the value more than once; the first
/// insertion wins and every caller sees the same bits afterwards.
pub(crate) fn cached(name: &'static str, bits: u32, compute: impl FnOnce() -> Real) -> Real {
    if let Some(v) = constant_cache()
        .read()
        .expect("constant cache poisoned")
        .get(&(name, bits))
    {
        return v.clone();
    }
    let value = compute();
    let mut cache = constant_cache().write().expect("constant cache poisoned");
    cache.entry((name, bits)).or_insert(value).clone()
}

/// π at `prec.working()` bits.
pub fn const_pi(prec: Precision) -> Real {
    let bits = prec.working();
    cached("pi", bits, || Float::with_val(bits, Constant::Pi))
}

/// ln 2 at `prec.working()` bits.
pub fn const_ln2(prec: Precision) -> Real {
    let bits = prec.working();
    cached("ln2", bits, || Float::with_val(bits, Constant::Log2))
}

/// √5 at `prec.working()` bits.
pub fn const_sqrt5(prec: Precision) -> Real {
    let bits = prec.working();
    cached("sqrt5", bits, || Float::with_val(bits, 5).sqrt())
}

/// The golden ratio α = (1 + √5)/2.
pub fn golden_alpha(prec: Precision) -> Real {
    let bits = prec.working();
    cached("alpha", bits, || (const_sqrt5(prec) + 1u32) / 2u32)
}

/// The conjugate β = (1 − √5)/2 = −1/α.
pub fn golden_beta(prec: Precision) -> Real {
    let bits = prec.working();
    cached("beta", bits, || (1u32 - const_sqrt5(prec)) / 2u32)
}

/// Integer power of a real, `x^n` for signed `n`.
pub fn powi(x: &Real, n: i64) -> Real {
    let n = i32::try_from(n).expect("exponent out of range");
    Float::with_val(x.prec(), x.pow(n))
}

/// Renders `x` in scientific notation with `digits` significant decimal
/// digits, e.g. `1.1593151565841244881072003137577413703e-1`.
pub fn to_decimal(x: &Real, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits))
}

/// Parses a decimal string produced by [`to_decimal`] (or any plain decimal
/// literal) at `bits` precision.
pub fn parse_decimal(s: &str, bits: u32) -> Result<Real> {
    Float::parse(s)
        .map(|p| Float::with_val(bits, p))
        .map_err(|e| Error::InvalidArgument(format!("cannot parse `{s}` as a real: {e}")))
}
