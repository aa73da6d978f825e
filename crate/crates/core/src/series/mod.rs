//! Certified evaluation of convergent series.
//!
//! A [`SeriesSpec`] pairs a term generator with a [`TailRule`] that bounds
//! everything past the truncation point. [`eval_series`] sums until the
//! tail bound drops below half the requested error and returns the partial
//! sum with a bound covering both truncation and accumulated rounding.
//!
//! Two tail rules exist:
//!
//! * [`TailRule::Geometric`]: a majorant `|term(k)| ≤ c·k^d·q^k` with
//!   `q < 1`. Past `k₀` the majorant's own ratio is below one and its tail
//!   is dominated by a geometric series.
//! * [`TailRule::PartialFractions`]: the term is `Σ rᵢ/(n + cᵢ)` with
//!   `Σ rᵢ = 0`. These decay only like `n⁻²`, so the tail is evaluated by
//!   Euler–Maclaurin on the partial fractions and the remainder bounded by
//!   the last Bernoulli correction.

pub mod gf;

use std::fmt;
use std::sync::Arc;

use rug::Float;

use crate::error::{Error, Result};
use crate::mpreal::Real;
use crate::specfun::bernoulli_even;

/// Default cap on the number of summed terms.
pub const DEFAULT_MAX_TERMS: u64 = 100_000;

/// Certified envelope constant: `ζ(k) − 1 ≤ 3·2^{−k}` for every `k ≥ 2`.
///
/// `ζ(k) − 1 = 2^{−k}(1 + Σ_{j≥3} (2/j)^k)` and the bracket is largest at
/// `k = 2`, where it equals `4(ζ(2) − 1) ≈ 2.58`.
pub const ZETA_MINUS_ONE_ENVELOPE: f64 = 3.0;

/// Upper bound for ζ(2), which dominates ζ(k) for all k ≥ 2.
pub const ZETA_TWO_UPPER: f64 = 1.644_934_066_848_227;

pub type TermFn = Arc<dyn Fn(u64) -> Real + Send + Sync>;

/// Majorant `|term(k)| ≤ coeff · k^degree · ratio^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricEnvelope {
    pub coeff: f64,
    pub degree: u32,
    pub ratio: f64,
}

impl GeometricEnvelope {
    // f64 inputs are rounded; widen slightly so the envelope stays an upper bound.
    const WIDEN: f64 = 1.0 + 1e-12;

    pub fn new(coeff: f64, degree: u32, ratio: f64) -> Self {
        Self {
            coeff: coeff * Self::WIDEN,
            degree,
            ratio: ratio * Self::WIDEN,
        }
    }

    /// log₂ of the envelope at `k ≥ 1`.
    pub fn log2_bound(&self, k: u64) -> f64 {
        let k = k.max(1) as f64;
        self.coeff.log2() + self.degree as f64 * k.log2() + k * self.ratio.log2()
    }

    /// `((k+1)/k)^degree · ratio`: bounds every envelope ratio from `k` on.
    pub fn ratio_bound(&self, k: u64) -> f64 {
        let k = k.max(1) as f64;
        ((k + 1.0) / k).powi(self.degree as i32) * self.ratio
    }

    /// First `k ≥ 1` with `ratio_bound(k) < 1`.
    pub fn k0(&self) -> Option<u64> {
        if !(self.ratio < 1.0) {
            return None;
        }
        let mut k = 1;
        while self.ratio_bound(k) >= 1.0 {
            k += 1;
        }
        Some(k)
    }

    /// Bound on `Σ_{j > k} |term(j)|`, or `None` if `k + 1 < k₀`.
    pub fn tail_after(&self, k: u64) -> Option<f64> {
        let rho = self.ratio_bound(k + 1);
        if !(rho < 1.0) {
            return None;
        }
        Some(self.log2_bound(k + 1).exp2() / (1.0 - rho))
    }
}

#[derive(Clone)]
pub enum TailRule {
    Geometric(GeometricEnvelope),
    /// Residue/shift pairs `(rᵢ, cᵢ)` with `term(n) = Σ rᵢ/(n + cᵢ)`.
    PartialFractions(Arc<Vec<(Real, Real)>>),
}

impl fmt::Debug for TailRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TailRule::Geometric(e) => f.debug_tuple("Geometric").field(e).finish(),
            TailRule::PartialFractions(p) => {
                let shifts: Vec<f64> = p.iter().map(|(_, c)| c.to_f64()).collect();
                f.debug_struct("PartialFractions")
                    .field("shifts", &shifts)
                    .finish()
            }
        }
    }
}

/// A summable family: `offset + Σ_{k ≥ start_k} term(k)`.
#[derive(Clone)]
pub struct SeriesSpec {
    pub start_k: u64,
    pub term: TermFn,
    pub tail_rule: TailRule,
    /// Constant added to the sum (zero when absent).
    pub offset: Option<Real>,
    /// Working precision of the terms.
    pub bits: u32,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesSpec")
            .field("start_k", &self.start_k)
            .field("tail_rule", &self.tail_rule)
            .field("bits", &self.bits)
            .finish_non_exhaustive()
    }
}

impl SeriesSpec {
    pub fn new(bits: u32, start_k: u64, tail_rule: TailRule, term: TermFn) -> Self {
        Self {
            start_k,
            term,
            tail_rule,
            offset: None,
            bits,
        }
    }

    pub fn with_offset(mut self, offset: Real) -> Self {
        self.offset = Some(offset);
        self
    }
}

#[derive(Debug, Clone)]
pub struct CertifiedValue {
    pub value: Real,
    /// The true sum lies within `value ± abs_error_bound`.
    pub abs_error_bound: f64,
    pub terms_used: u64,
}

/// Geometric-tail rule for `p(k)(ζ(k) − 1)x^k` with `p(k) ≤ k^degree`:
/// `|term| ≤ 3·k^degree·(|x|/2)^k`.
pub fn tail_rule_zeta_family(poly_degree: u32, x: &Real) -> Result<TailRule> {
    let ax = x.to_f64().abs();
    if !(ax < 2.0) {
        return Err(Error::domain("tail_rule_zeta_family", "|x| < 2"));
    }
    Ok(TailRule::Geometric(GeometricEnvelope::new(
        ZETA_MINUS_ONE_ENVELOPE,
        poly_degree,
        ax / 2.0,
    )))
}

/// Geometric-tail rule for `ζ(k)·base^{−k}/k` and relatives:
/// `|term| ≤ ζ(2)·base^{−k}`.
pub fn tail_rule_reciprocal_family(base: &rug::Integer) -> Result<TailRule> {
    if *base <= 1 {
        return Err(Error::domain("tail_rule_reciprocal_family", "base >= 2"));
    }
    Ok(TailRule::Geometric(GeometricEnvelope::new(
        ZETA_TWO_UPPER,
        0,
        1.0 / base.to_f64(),
    )))
}

fn rounding_bound(bits: u32, operations: u64, magnitude: f64) -> f64 {
    operations as f64 * (2.0 - bits as f64).exp2() * magnitude.max(1.0)
}

/// Sums `spec` until the certified tail is at most `target_abs_err / 2`.
pub fn eval_series(spec: &SeriesSpec, target_abs_err: f64, max_terms: u64) -> Result<CertifiedValue> {
    if !(target_abs_err > 0.0) {
        return Err(Error::InvalidArgument("target error must be positive".into()));
    }
    match &spec.tail_rule {
        TailRule::Geometric(env) => eval_geometric(spec, env, Stop::Target(target_abs_err / 2.0), max_terms),
        TailRule::PartialFractions(pf) => {
            let head = pf_head_length(pf, target_abs_err);
            let cut = spec.start_k.max(head);
            eval_partial_fractions(spec, pf, cut, target_abs_err / 4.0, max_terms)
        }
    }
}

/// Sums exactly `terms` terms (for geometric rules) or the head up to
/// `start_k + terms` plus the Euler–Maclaurin tail (for partial fractions),
/// reporting the bound that applies at that truncation point.
pub fn eval_series_fixed(spec: &SeriesSpec, terms: u64, target_abs_err: f64) -> Result<CertifiedValue> {
    match &spec.tail_rule {
        TailRule::Geometric(env) => eval_geometric(spec, env, Stop::Count(terms), u64::MAX),
        TailRule::PartialFractions(pf) => {
            eval_partial_fractions(spec, pf, spec.start_k + terms, target_abs_err / 4.0, u64::MAX)
        }
    }
}

enum Stop {
    Target(f64),
    Count(u64),
}

fn eval_geometric(
    spec: &SeriesSpec,
    env: &GeometricEnvelope,
    stop: Stop,
    max_terms: u64,
) -> Result<CertifiedValue> {
    if env.k0().is_none() {
        return Err(Error::domain("eval_series", "envelope ratio < 1"));
    }
    let bits = spec.bits;
    let mut sum = spec
        .offset
        .clone()
        .unwrap_or_else(|| Float::with_val(bits, 0));
    let mut magnitude = sum.to_f64().abs();
    let mut k = spec.start_k;
    let mut terms = 0u64;
    loop {
        sum += (spec.term)(k);
        terms += 1;
        magnitude = magnitude.max(sum.to_f64().abs());
        let tail = env.tail_after(k);
        match stop {
            Stop::Target(t) => {
                if let Some(tail) = tail.filter(|&b| b <= t) {
                    return Ok(CertifiedValue {
                        value: sum,
                        abs_error_bound: tail + rounding_bound(bits, terms, magnitude),
                        terms_used: terms,
                    });
                }
                if terms >= max_terms {
                    return Err(Error::NonConvergence { max_terms });
                }
            }
            Stop::Count(n) => {
                if terms >= n {
                    return Ok(CertifiedValue {
                        value: sum,
                        abs_error_bound: tail.unwrap_or(f64::INFINITY)
                            + rounding_bound(bits, terms, magnitude),
                        terms_used: terms,
                    });
                }
            }
        }
        k += 1;
    }
}

/// First index at which the Euler–Maclaurin tail reaches `target`: the
/// smallest remainder is about `e^{−2π(n + c)}`.
fn pf_head_length(poles: &[(Real, Real)], target: f64) -> u64 {
    let min_shift = poles
        .iter()
        .map(|(_, c)| c.to_f64())
        .fold(f64::INFINITY, f64::min);
    let need = (-target.ln()) / (2.0 * std::f64::consts::PI) + 3.0 - min_shift.min(0.0);
    need.ceil().max(1.0) as u64
}

fn eval_partial_fractions(
    spec: &SeriesSpec,
    poles: &[(Real, Real)],
    cut: u64,
    em_target: f64,
    max_terms: u64,
) -> Result<CertifiedValue> {
    let bits = spec.bits;
    let residue_sum: Real = Float::with_val(bits, Float::sum(poles.iter().map(|(r, _)| r)));
    let residue_abs: f64 = poles.iter().map(|(r, _)| r.to_f64().abs()).sum();
    if residue_sum.to_f64().abs() > residue_abs * (16.0 - bits as f64).exp2() {
        return Err(Error::domain("eval_series", "partial-fraction residues must sum to zero"));
    }
    if poles.iter().any(|(_, c)| !(Float::with_val(bits, c + spec.start_k) > 0)) {
        return Err(Error::domain("eval_series", "n + c > 0 for every summed n"));
    }

    let mut cut = cut.max(spec.start_k);
    loop {
        if cut - spec.start_k > max_terms {
            return Err(Error::NonConvergence { max_terms });
        }
        if let Some(v) = partial_fraction_attempt(spec, poles, cut, em_target, residue_abs) {
            return Ok(v);
        }
        cut *= 2;
    }
}

fn partial_fraction_attempt(
    spec: &SeriesSpec,
    poles: &[(Real, Real)],
    cut: u64,
    em_target: f64,
    residue_abs: f64,
) -> Option<CertifiedValue> {
    let bits = spec.bits;
    let mut sum = spec
        .offset
        .clone()
        .unwrap_or_else(|| Float::with_val(bits, 0));
    let mut magnitude = sum.to_f64().abs();
    for n in spec.start_k..cut {
        sum += (spec.term)(n);
        magnitude = magnitude.max(sum.to_f64().abs());
    }

    // Σ_{n ≥ K} f(n) = −Σ rᵢ ln(K + cᵢ) + f(K)/2 + Σ_j B_{2j}/(2j) Σ rᵢ (K + cᵢ)^{−2j} + R
    let shifted: Vec<Real> = poles.iter().map(|(_, c)| Float::with_val(bits, c + cut)).collect();
    let mut tail = Float::with_val(bits, 0);
    for ((r, _), x) in poles.iter().zip(&shifted) {
        tail -= Float::with_val(bits, r * Float::with_val(bits, x.ln_ref()));
        tail += Float::with_val(bits, r / x) / 2u32;
    }
    let inv_sq: Vec<Real> = shifted
        .iter()
        .map(|x| Float::with_val(bits, x.square_ref()).recip())
        .collect();
    let mut powers = inv_sq.clone();
    let min_shift = shifted.iter().map(|x| x.to_f64()).fold(f64::INFINITY, f64::min);
    let mut prev = f64::INFINITY;
    let mut corrections = 0u64;
    let mut remainder = f64::INFINITY;
    for j in 1u32.. {
        let b = Float::with_val(bits, bernoulli_even(j as usize)) / (2 * j);
        let mut inner = Float::with_val(bits, 0);
        for ((r, _), p) in poles.iter().zip(&powers) {
            inner += Float::with_val(bits, r * p);
        }
        tail += Float::with_val(bits, &b * &inner);
        corrections += 1;
        // |R_j| ≤ |B_{2j}|/(2j) · Σ|rᵢ| (K + cᵢ)^{−2j}
        let majorant = b.to_f64().abs() * residue_abs * min_shift.powf(-2.0 * j as f64);
        if majorant <= em_target {
            remainder = majorant;
            break;
        }
        if majorant > prev || !majorant.is_finite() {
            return None;
        }
        prev = majorant;
        for (p, q) in powers.iter_mut().zip(&inv_sq) {
            *p *= q;
        }
    }
    let terms = (cut - spec.start_k) + corrections;
    let value = sum + tail;
    let ops = terms + 4 * poles.len() as u64 * (corrections + 1);
    Some(CertifiedValue {
        abs_error_bound: remainder + rounding_bound(bits, ops, magnitude),
        value,
        terms_used: terms,
    })
}

#[cfg(test)]
mod tests;
