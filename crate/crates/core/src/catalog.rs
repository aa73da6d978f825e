//! The registry of identities: each entry pairs a certified series (left
//! side) with a closed form (right side) over a parameter domain.
//!
//! Left and right sides are built independently. Where a closed form is
//! stated in terms of a different integer expression than the series base
//! (e.g. `L_n F_m + F_n L_m` against `2F_{n+m}`), both expressions are
//! evaluated as written, so the sequence identities are exercised too.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rug::{Float, Integer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mpreal::{const_ln2, const_pi, const_sqrt5, golden_alpha, golden_beta, powi, Precision, Real};
use crate::sequences::{fib, id_catalan_like, id_double, id_five_fib, id_lucas_fib, id_lucas_lucas, lucas, SeqIndex};
use crate::series::{tail_rule_reciprocal_family, GeometricEnvelope, SeriesSpec, TailRule, TermFn};
use crate::specfun::{digamma, euler_gamma, ln_gamma, omega, trig_closed, zeta_int, zeta_int_minus_one, TrigKind};

const ALPHA: f64 = 1.618_033_988_749_895;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub m: Option<i64>,
    pub n: Option<i64>,
}

impl ParamSet {
    pub const EMPTY: ParamSet = ParamSet { m: None, n: None };

    pub fn m(m: i64) -> Self {
        Self { m: Some(m), n: None }
    }

    pub fn n(n: i64) -> Self {
        Self { m: None, n: Some(n) }
    }

    pub fn mn(m: i64, n: i64) -> Self {
        Self { m: Some(m), n: Some(n) }
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.n) {
            (None, None) => f.write_str("{}"),
            (Some(m), None) => write!(f, "{{m={m}}}"),
            (None, Some(n)) => write!(f, "{{n={n}}}"),
            (Some(m), Some(n)) => write!(f, "{{m={m}, n={n}}}"),
        }
    }
}

/// Which parameters an entry takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Params {
    None,
    M,
    N,
    MN,
}

/// Whether an entry is expected to verify. A `Discrepancy` entry records a
/// known mismatch with the published statement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    #[default]
    Pass,
    Discrepancy,
}

type DomainFn = Box<dyn Fn(&ParamSet) -> Result<()> + Send + Sync>;
type LhsFn = Box<dyn Fn(&ParamSet, Precision) -> Result<SeriesSpec> + Send + Sync>;
type RhsFn = Box<dyn Fn(&ParamSet, Precision) -> Result<Real> + Send + Sync>;

pub struct IdentityEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub domain_description: &'static str,
    /// The closed form as printed, for audit trails.
    pub paper_ref: &'static str,
    pub params: Params,
    pub expected: Expectation,
    domain: DomainFn,
    lhs: LhsFn,
    rhs: RhsFn,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

impl IdentityEntry {
    /// Checks `p` against the domain; the error names the violated constraint.
    pub fn check_domain(&self, p: &ParamSet) -> Result<()> {
        let (want_m, want_n) = match self.params {
            Params::None => (false, false),
            Params::M => (true, false),
            Params::N => (false, true),
            Params::MN => (true, true),
        };
        for (name, want, have) in [("m", want_m, p.m.is_some()), ("n", want_n, p.n.is_some())] {
            if want && !have {
                return Err(Error::domain(self.id, format!("{name} required")));
            }
            if !want && have {
                return Err(Error::domain(self.id, format!("takes no {name}")));
            }
        }
        (self.domain)(p)
    }

    pub fn accepts(&self, p: &ParamSet) -> bool {
        self.check_domain(p).is_ok()
    }

    /// The left-hand series at `prec.working()` bits.
    pub fn build_lhs(&self, p: &ParamSet, prec: Precision) -> Result<SeriesSpec> {
        self.check_domain(p)?;
        (self.lhs)(p, prec)
    }

    /// The closed form at `prec.working()` bits.
    pub fn build_rhs(&self, p: &ParamSet, prec: Precision) -> Result<Real> {
        self.check_domain(p)?;
        (self.rhs)(p, prec)
    }
}

/// All entries, in catalog order.
pub fn catalog_entries() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn entry(id: &str) -> Result<&'static IdentityEntry> {
    catalog_entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

// ---------------------------------------------------------------------------
// Shared pieces

#[derive(Clone, Copy)]
enum Seq {
    F,
    L,
}

impl Seq {
    fn at(self, i: SeqIndex) -> Integer {
        match self {
            Seq::F => fib(i),
            Seq::L => lucas(i),
        }
    }

    /// `|S_i| ≤ bound · α^i` for `i ≥ 0`.
    fn bound(self) -> f64 {
        match self {
            Seq::F => 1.0,
            Seq::L => 2.0,
        }
    }
}

struct Ctx {
    bits: u32,
    p: Precision,
}

impl Ctx {
    fn new(prec: Precision) -> Self {
        let bits = prec.working();
        Self { bits, p: Precision::exact(bits) }
    }

    fn int(&self, v: impl Into<Integer>) -> Real {
        Float::with_val(self.bits, v.into())
    }

    fn frac(&self, num: i32, den: u32) -> Real {
        Float::with_val(self.bits, num) / den
    }

    fn pi(&self) -> Real {
        const_pi(self.p)
    }

    fn gamma(&self) -> Real {
        euler_gamma(self.p)
    }

    fn sqrt5(&self) -> Real {
        const_sqrt5(self.p)
    }

    fn alpha(&self) -> Real {
        golden_alpha(self.p)
    }

    fn beta(&self) -> Real {
        golden_beta(self.p)
    }

    fn mul(&self, a: &Real, b: &Real) -> Real {
        Float::with_val(self.bits, a * b)
    }

    /// √5π/2, the argument of every circular function in the closed forms.
    fn half_sqrt5_pi(&self) -> Real {
        self.mul(&self.sqrt5(), &self.pi()) / 2u32
    }

    fn tan(&self) -> Result<Real> {
        trig_closed(TrigKind::Tan, &self.half_sqrt5_pi())
    }

    fn sec(&self) -> Result<Real> {
        trig_closed(TrigKind::Sec, &self.half_sqrt5_pi())
    }

    fn sec2(&self) -> Result<Real> {
        trig_closed(TrigKind::SecSquared, &self.half_sqrt5_pi())
    }

    /// `1 + (√5π/5) tan(√5π/2)`, the value of `Σ 1/(n² + n − 1)`.
    fn aux1(&self) -> Result<Real> {
        Ok(self.mul(&self.sqrt5(), &self.pi()) / 5u32 * self.tan()? + 1u32)
    }

    /// `((5 + √5)/10) π tan(√5π/2)`.
    fn five_plus_sqrt5_tan(&self) -> Result<Real> {
        let c = (self.sqrt5() + 5u32) / 10u32;
        Ok(self.mul(&c, &self.pi()) * self.tan()?)
    }
}

fn m_of(p: &ParamSet) -> i64 {
    p.m.expect("domain check guarantees m")
}

fn n_of(p: &ParamSet) -> i64 {
    p.n.expect("domain check guarantees n")
}

fn need(cond: bool, id: &'static str, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(id, constraint))
    }
}

fn geometric(coeff: f64, degree: u32, ratio: f64) -> TailRule {
    TailRule::Geometric(GeometricEnvelope::new(coeff, degree, ratio))
}

fn spec(ctx: &Ctx, start: u64, rule: TailRule, term: impl Fn(u64) -> Real + Send + Sync + 'static) -> SeriesSpec {
    let term: TermFn = Arc::new(term);
    SeriesSpec::new(ctx.bits, start, rule, term)
}

fn k32(k: u64) -> u32 {
    u32::try_from(k).expect("term index out of range")
}

// ---------------------------------------------------------------------------
// Zeta-weighted Fibonacci/Lucas families

/// `Σ_{k≥1} (2k − 1)(ζ(2k) − 1) S_{2k+m+1}`.
fn even_weighted_lhs(s: Seq, m: i64, prec: Precision) -> SeriesSpec {
    let ctx = Ctx::new(prec);
    let (bits, p) = (ctx.bits, ctx.p);
    // (2k−1)·3·4^{−k}·c·α^{2k+m+1} ≤ 6c·α^{m+1}·k·(α²/4)^k
    let rule = geometric(6.0 * s.bound() * ALPHA.powi(m as i32 + 1), 1, ALPHA * ALPHA / 4.0);
    spec(&ctx, 1, rule, move |k| {
        let z = zeta_int_minus_one(k32(2 * k), p);
        Float::with_val(bits, z * s.at(2 * k as i64 + m + 1)) * (2 * k - 1)
    })
}

/// `(π²/2) sec²(√5π/2) S_{m+3} − (9S_m + 7S_{m−1})/2`.
fn even_weighted_rhs(s: Seq, m: i64, prec: Precision) -> Result<Real> {
    let ctx = Ctx::new(prec);
    let pi = ctx.pi();
    let lead = Float::with_val(ctx.bits, pi.square_ref()) / 2u32 * ctx.sec2()? * ctx.int(s.at(m + 3));
    let rational = ctx.int(s.at(m) * 9u32 + s.at(m - 1) * 7u32) / 2u32;
    Ok(lead - rational)
}

/// `c π² sec²(√5π/2) − r` for the worked examples.
fn example_rhs(c: Real, r: Real, prec: Precision) -> Result<Real> {
    let ctx = Ctx::new(prec);
    let pi = ctx.pi();
    let pi2 = Float::with_val(ctx.bits, pi.square_ref());
    Ok(ctx.mul(&c, &pi2) * ctx.sec2()? - r)
}

/// `Σ_{k≥2} (k + 1)(ζ(k) − 1)/k · S_{k+m}`.
fn log_weighted_lhs(s: Seq, m: i64, prec: Precision) -> SeriesSpec {
    let ctx = Ctx::new(prec);
    let (bits, p) = (ctx.bits, ctx.p);
    // (k+1)/k ≤ 3/2 and ζ(k)−1 ≤ 3·2^{−k}
    let rule = geometric(4.5 * s.bound() * ALPHA.powi(m as i32), 0, ALPHA / 2.0);
    spec(&ctx, 2, rule, move |k| {
        let z = zeta_int_minus_one(k32(k), p);
        Float::with_val(bits, z * s.at(k as i64 + m)) * (k + 1) / k
    })
}

/// `(lnΓ(β²) − αψ(β²), lnΓ(α²) − βψ(α²))`.
fn log_weighted_parts(ctx: &Ctx) -> Result<(Real, Real)> {
    let (a, b) = (ctx.alpha(), ctx.beta());
    let a2 = Float::with_val(ctx.bits, &a + 1u32);
    let b2 = Float::with_val(ctx.bits, &b + 1u32);
    let pa = ln_gamma(&b2)? - ctx.mul(&a, &digamma(&b2)?);
    let pb = ln_gamma(&a2)? - ctx.mul(&b, &digamma(&a2)?);
    Ok((pa, pb))
}

fn log_weighted_rhs(s: Seq, m: i64, prec: Precision) -> Result<Real> {
    let ctx = Ctx::new(prec);
    let (pa, pb) = log_weighted_parts(&ctx)?;
    let am = ctx.mul(&powi(&ctx.alpha(), m), &pa);
    let bm = ctx.mul(&powi(&ctx.beta(), m), &pb);
    let lead = Float::with_val(ctx.bits, 1u32 - ctx.gamma()) * 2u32 * ctx.int(s.at(m + 1));
    Ok(match s {
        Seq::L => lead + am + bm,
        Seq::F => lead + (am - bm) / ctx.sqrt5(),
    })
}

/// `Σ_{k≥1} (2k + 1)(ζ(2k + 1) − 1) S_{2k+m}`.
fn odd_weighted_lhs(s: Seq, m: i64, prec: Precision) -> SeriesSpec {
    let ctx = Ctx::new(prec);
    let (bits, p) = (ctx.bits, ctx.p);
    // (2k+1)·3·2^{−2k−1}·c·α^{2k+m} ≤ 4.5c·α^m·k·(α²/4)^k
    let rule = geometric(4.5 * s.bound() * ALPHA.powi(m as i32), 1, ALPHA * ALPHA / 4.0);
    spec(&ctx, 1, rule, move |k| {
        let z = zeta_int_minus_one(k32(2 * k + 1), p);
        Float::with_val(bits, z * s.at(2 * k as i64 + m)) * (2 * k + 1)
    })
}

fn omegas(ctx: &Ctx, m: i64) -> Result<(Real, Real)> {
    let m = u32::try_from(m).map_err(|_| Error::domain("omega", "m >= 0"))?;
    Ok((omega(m, &ctx.alpha())?, omega(m, &ctx.beta())?))
}

fn odd_weighted_rhs(s: Seq, m: i64, prec: Precision) -> Result<Real> {
    let ctx = Ctx::new(prec);
    let (wa, wb) = omegas(&ctx, m)?;
    let lead = Float::with_val(ctx.bits, 1u32 - ctx.gamma()) * ctx.int(s.at(m));
    Ok(match s {
        Seq::F => lead - (wa - wb) / ctx.sqrt5() / 2u32,
        Seq::L => lead - (wa + wb) / 2u32,
    })
}

// ---------------------------------------------------------------------------
// Partial-fraction series over n

/// `offset + Σ_{n≥1} (A + Bn) / (n(n² + n − 1))`, with
/// `n(n² + n − 1) = n(n + α)(n + β)`.
fn cubic_lhs(a: Integer, b: Integer, offset: Option<Real>, prec: Precision) -> SeriesSpec {
    let ctx = Ctx::new(prec);
    let bits = ctx.bits;
    let (al, be, s5) = (ctx.alpha(), ctx.beta(), ctx.sqrt5());
    let (ar, br) = (ctx.int(a.clone()), ctx.int(b.clone()));
    let mut poles = Vec::new();
    if a != 0 {
        // n = 0: A/(αβ) = −A
        poles.push((-ar.clone(), Float::with_val(bits, 0)));
    }
    // n = −α: (A − Bα)/(α√5);  n = −β: (A − Bβ)/(−β√5)
    let at_alpha = (Float::with_val(bits, &ar - ctx.mul(&br, &al))) / ctx.mul(&al, &s5);
    let at_beta = (Float::with_val(bits, &ar - ctx.mul(&br, &be))) / ctx.mul(&be, &s5);
    poles.push((at_alpha, al));
    poles.push((-at_beta, be));
    let rule = TailRule::PartialFractions(Arc::new(poles));
    let s = spec(&ctx, 1, rule, move |n| {
        let den = Integer::from(n) * (Integer::from(n) * n + n - 1u32);
        let num = Integer::from(&b * n) + &a;
        Float::with_val(bits, num) / den
    });
    match offset {
        Some(o) => s.with_offset(o),
        None => s,
    }
}

// ---------------------------------------------------------------------------
// Reciprocal-power families

/// The three series shapes over a reciprocal integer base.
#[derive(Clone, Copy)]
enum Recip {
    /// `Σ_{k≥2} ζ(k)/(k b^k) = lnΓ((b′−1)/b′) − γ/b′`
    Log,
    /// `Σ_{k≥1} ζ(2k)/(k b^{2k}) = ln(π/b′) + ln csc(π/b′)`
    Even,
    /// `Σ_{k≥1} ζ(2k+1)/((2k+1) b^{2k})` (closed form per entry)
    Odd,
}

type BaseFn = fn(i64, i64) -> Result<Integer>;

fn recip_lhs(shape: Recip, base: &Integer, prec: Precision) -> Result<SeriesSpec> {
    let ctx = Ctx::new(prec);
    let p = ctx.p;
    let b = ctx.int(base.clone());
    Ok(match shape {
        Recip::Log => spec(&ctx, 2, tail_rule_reciprocal_family(base)?, move |k| {
            let pw = powi(&b, k as i64);
            zeta_int(k32(k), p) / pw / k
        }),
        Recip::Even => {
            let sq = Integer::from(base.square_ref());
            spec(&ctx, 1, tail_rule_reciprocal_family(&sq)?, move |k| {
                let pw = powi(&b, 2 * k as i64);
                zeta_int(k32(2 * k), p) / pw / k
            })
        }
        Recip::Odd => {
            let sq = Integer::from(base.square_ref());
            spec(&ctx, 1, tail_rule_reciprocal_family(&sq)?, move |k| {
                let pw = powi(&b, 2 * k as i64);
                zeta_int(k32(2 * k + 1), p) / pw / (2 * k + 1)
            })
        }
    })
}

fn recip_rhs(shape: Recip, base: &Integer, prec: Precision) -> Result<Real> {
    let ctx = Ctx::new(prec);
    let b = ctx.int(base.clone());
    match shape {
        Recip::Log => {
            let x = Float::with_val(ctx.bits, &b - 1u32) / &b;
            Ok(ln_gamma(&x)? - ctx.gamma() / &b)
        }
        Recip::Even => {
            let x = ctx.pi() / &b;
            let csc = trig_closed(TrigKind::Csc, &x)?;
            Ok(x.ln() + csc.ln())
        }
        Recip::Odd => unreachable!("odd reciprocal closed forms are entry specific"),
    }
}

fn at_least_two(id: &'static str, v: &Integer, what: &str) -> Result<()> {
    need(*v >= 2, id, &format!("base >= 2 ({what} = {v})"))
}

/// Entry over a reciprocal integer base: the series uses `lhs_base`, the
/// closed form `rhs_base`; both must be at least 2.
#[allow(clippy::too_many_arguments)]
fn recip_entry(
    id: &'static str,
    title: &'static str,
    domain_description: &'static str,
    paper_ref: &'static str,
    params: Params,
    shape: Recip,
    constraint: fn(i64, i64) -> Result<()>,
    lhs_base: BaseFn,
    rhs_base: BaseFn,
) -> IdentityEntry {
    let args = move |p: &ParamSet| (p.m.unwrap_or(0), p.n.unwrap_or(0));
    IdentityEntry {
        id,
        title,
        domain_description,
        paper_ref,
        params,
        expected: Expectation::Pass,
        domain: Box::new(move |p| {
            let (m, n) = args(p);
            constraint(m, n)?;
            at_least_two(id, &lhs_base(m, n)?, "series base")?;
            at_least_two(id, &rhs_base(m, n)?, "closed-form base")
        }),
        lhs: Box::new(move |p, prec| {
            let (m, n) = args(p);
            recip_lhs(shape, &lhs_base(m, n)?, prec)
        }),
        rhs: Box::new(move |p, prec| {
            let (m, n) = args(p);
            recip_rhs(shape, &rhs_base(m, n)?, prec)
        }),
    }
}

fn mn_ge(id: &'static str) -> impl Fn(i64, i64) -> Result<()> {
    move |m, n| need(m >= 1 && n >= m, id, "n >= m >= 1")
}

// ---------------------------------------------------------------------------

fn fixed(
    id: &'static str,
    title: &'static str,
    paper_ref: &'static str,
    lhs: impl Fn(Precision) -> SeriesSpec + Send + Sync + 'static,
    rhs: impl Fn(Precision) -> Result<Real> + Send + Sync + 'static,
) -> IdentityEntry {
    IdentityEntry {
        id,
        title,
        domain_description: "no parameters",
        paper_ref,
        params: Params::None,
        expected: Expectation::Pass,
        domain: Box::new(|_| Ok(())),
        lhs: Box::new(move |_, prec| Ok(lhs(prec))),
        rhs: Box::new(move |_, prec| rhs(prec)),
    }
}

#[allow(clippy::too_many_arguments)]
fn over_m(
    id: &'static str,
    title: &'static str,
    domain_description: &'static str,
    paper_ref: &'static str,
    min_m: i64,
    lhs: impl Fn(i64, Precision) -> SeriesSpec + Send + Sync + 'static,
    rhs: impl Fn(i64, Precision) -> Result<Real> + Send + Sync + 'static,
) -> IdentityEntry {
    let constraint = if min_m == 0 { "m >= 0" } else { "m >= 2" };
    IdentityEntry {
        id,
        title,
        domain_description,
        paper_ref,
        params: Params::M,
        expected: Expectation::Pass,
        domain: Box::new(move |p| need(m_of(p) >= min_m, id, constraint)),
        lhs: Box::new(move |p, prec| Ok(lhs(m_of(p), prec))),
        rhs: Box::new(move |p, prec| rhs(m_of(p), prec)),
    }
}

fn over_n(
    id: &'static str,
    title: &'static str,
    domain_description: &'static str,
    paper_ref: &'static str,
    min_n: i64,
    lhs: impl Fn(i64, Precision) -> Result<SeriesSpec> + Send + Sync + 'static,
    rhs: impl Fn(i64, Precision) -> Result<Real> + Send + Sync + 'static,
) -> IdentityEntry {
    IdentityEntry {
        id,
        title,
        domain_description,
        paper_ref,
        params: Params::N,
        expected: Expectation::Pass,
        domain: Box::new(move |p| need(n_of(p) >= min_n, id, domain_description)),
        lhs: Box::new(move |p, prec| lhs(n_of(p), prec)),
        rhs: Box::new(move |p, prec| rhs(n_of(p), prec)),
    }
}

fn build_catalog() -> Vec<IdentityEntry> {
    let mut v = Vec::new();

    // Known values.
    v.push(fixed(
        "K1",
        "sum zeta(2k+1) F_{2k} / 5^k = 1/2",
        "\\sum_{k=1}^{\\infty}\\zeta(2k+1)\\frac{F_{2k}}{5^k}=\\frac{1}{2}",
        |prec| {
            let ctx = Ctx::new(prec);
            let (bits, p) = (ctx.bits, ctx.p);
            // ζ(2k+1)·α^{2k}/5^k ≤ ζ(3)(α²/5)^k
            spec(&ctx, 1, geometric(1.21, 0, ALPHA * ALPHA / 5.0), move |k| {
                let z = zeta_int(k32(2 * k + 1), p);
                let five = powi(&Float::with_val(bits, 5), k as i64);
                Float::with_val(bits, z * fib(2 * k as i64)) / five
            })
        },
        |prec| Ok(Ctx::new(prec).frac(1, 2)),
    ));
    v.push(fixed(
        "K2",
        "sum (zeta(2k+1) - 1) F_{2k} = 1/2",
        "\\sum_{k=1}^{\\infty}(\\zeta(2k+1)-1)F_{2k}=\\frac{1}{2}",
        |prec| {
            let ctx = Ctx::new(prec);
            let (bits, p) = (ctx.bits, ctx.p);
            spec(&ctx, 1, geometric(1.5, 0, ALPHA * ALPHA / 4.0), move |k| {
                let z = zeta_int_minus_one(k32(2 * k + 1), p);
                Float::with_val(bits, z * fib(2 * k as i64))
            })
        },
        |prec| Ok(Ctx::new(prec).frac(1, 2)),
    ));
    v.push(fixed(
        "K3",
        "sum (zeta(k) - 1) F_{k-1} = 1 + (pi/sqrt5) tan(sqrt5 pi/2)",
        "\\sum_{k=2}^{\\infty}(\\zeta(k)-1)F_{k-1}=1+\\frac{\\pi}{\\sqrt{5}}\\tan\\frac{\\sqrt{5}\\pi}{2}",
        |prec| {
            let ctx = Ctx::new(prec);
            let (bits, p) = (ctx.bits, ctx.p);
            spec(&ctx, 2, geometric(3.0, 0, ALPHA / 2.0), move |k| {
                let z = zeta_int_minus_one(k32(k), p);
                Float::with_val(bits, z * fib(k as i64 - 1))
            })
        },
        |prec| {
            let ctx = Ctx::new(prec);
            Ok(ctx.pi() / ctx.sqrt5() * ctx.tan()? + 1u32)
        },
    ));

    // (2k − 1)(ζ(2k) − 1) weights.
    v.push(over_m(
        "T1-F",
        "sum (2k-1)(zeta(2k)-1) F_{2k+m+1}",
        "m >= 2",
        "\\frac{\\pi^2}{2}\\sec^2\\left(\\frac{\\sqrt{5}\\pi}{2}\\right)F_{m+3}-\\frac{9F_m+7F_{m-1}}{2}",
        2,
        |m, prec| even_weighted_lhs(Seq::F, m, prec),
        |m, prec| even_weighted_rhs(Seq::F, m, prec),
    ));
    v.push(over_m(
        "T1-L",
        "sum (2k-1)(zeta(2k)-1) L_{2k+m+1}",
        "m >= 2",
        "\\frac{\\pi^2}{2}\\sec^2\\left(\\frac{\\sqrt{5}\\pi}{2}\\right)L_{m+3}-\\frac{9L_m+7L_{m-1}}{2}",
        2,
        |m, prec| even_weighted_lhs(Seq::L, m, prec),
        |m, prec| even_weighted_rhs(Seq::L, m, prec),
    ));
    let examples: [(&'static str, Seq, i64, i32, u32, i32, u32, &'static str); 4] = [
        ("EX1-F2", Seq::F, 2, 5, 2, 8, 1, "\\frac{5\\pi^2}{2}\\sec^2\\left(\\frac{\\sqrt{5}\\pi}{2}\\right)-8"),
        ("EX1-F3", Seq::F, 3, 4, 1, 25, 2, "4\\pi^2\\sec^2\\left(\\frac{\\sqrt{5}\\pi}{2}\\right)-\\frac{25}{2}"),
        ("EX1-L2", Seq::L, 2, 11, 2, 17, 1, "\\frac{11\\pi^2}{2}\\sec^2\\left(\\frac{\\sqrt{5}\\pi}{2}\\right)-17"),
        ("EX1-L3", Seq::L, 3, 9, 1, 57, 2, "9\\pi^2\\sec^2\\left(\\frac{\\sqrt{5}\\pi}{2}\\right)-\\frac{57}{2}"),
    ];
    for (id, s, m, cn, cd, rn, rd, text) in examples {
        let title = match (s, m) {
            (Seq::F, 2) => "sum (2k-1)(zeta(2k)-1) F_{2k+3}",
            (Seq::F, _) => "sum (2k-1)(zeta(2k)-1) F_{2k+4}",
            (Seq::L, 2) => "sum (2k-1)(zeta(2k)-1) L_{2k+3}",
            (Seq::L, _) => "sum (2k-1)(zeta(2k)-1) L_{2k+4}",
        };
        v.push(fixed(
            id,
            title,
            text,
            move |prec| even_weighted_lhs(s, m, prec),
            move |prec| {
                let ctx = Ctx::new(prec);
                example_rhs(ctx.frac(cn, cd), ctx.frac(rn, rd), prec)
            },
        ));
    }

    // (k + 1)(ζ(k) − 1)/k weights.
    v.push(over_m(
        "T2-L",
        "sum (k+1)(zeta(k)-1)/k L_{k+m}",
        "m >= 0",
        "2(1-\\gamma)L_{m+1}+\\alpha^m\\left(\\ln\\Gamma(\\beta^2)-\\alpha\\psi(\\beta^2)\\right)+\\beta^m\\left(\\ln\\Gamma(\\alpha^2)-\\beta\\psi(\\alpha^2)\\right)",
        0,
        |m, prec| log_weighted_lhs(Seq::L, m, prec),
        |m, prec| log_weighted_rhs(Seq::L, m, prec),
    ));
    v.push(over_m(
        "T2-F",
        "sum (k+1)(zeta(k)-1)/k F_{k+m}",
        "m >= 0",
        "2(1-\\gamma)F_{m+1}+\\frac{\\alpha^m}{\\sqrt{5}}\\left(\\ln\\Gamma(\\beta^2)-\\alpha\\psi(\\beta^2)\\right)-\\frac{\\beta^m}{\\sqrt{5}}\\left(\\ln\\Gamma(\\alpha^2)-\\beta\\psi(\\alpha^2)\\right)",
        0,
        |m, prec| log_weighted_lhs(Seq::F, m, prec),
        |m, prec| log_weighted_rhs(Seq::F, m, prec),
    ));
    v.push(fixed(
        "AUX-1",
        "sum_{n>=1} 1/(n^2+n-1)",
        "\\sum_{n=1}^{\\infty}\\frac{1}{n^2+n-1}=1+\\frac{\\sqrt{5}\\pi}{5}\\tan\\frac{\\sqrt{5}\\pi}{2}",
        |prec| cubic_lhs(Integer::ZERO, Integer::from(1), None, prec),
        |prec| Ctx::new(prec).aux1(),
    ));
    v.push(fixed(
        "AUX-2",
        "sum_{n>=1} 1/(n(n^2+n-1))",
        "\\sum_{n=1}^{\\infty}\\frac{1}{n(n^2+n-1)}=1-\\gamma-\\psi(\\alpha)+\\frac{5+\\sqrt{5}}{10}\\pi\\tan\\frac{\\sqrt{5}\\pi}{2}",
        |prec| cubic_lhs(Integer::from(1), Integer::ZERO, None, prec),
        |prec| {
            let ctx = Ctx::new(prec);
            Ok(Float::with_val(ctx.bits, 1u32 - ctx.gamma()) - digamma(&ctx.alpha())? + ctx.five_plus_sqrt5_tan()?)
        },
    ));
    v.push(over_m(
        "AUX-PSI-L",
        "alpha^{m+1} psi(beta^2) + beta^{m+1} psi(alpha^2)",
        "m >= 0",
        "\\left(\\psi(\\alpha)-1-\\frac{5+\\sqrt{5}}{10}\\pi\\tan\\frac{\\sqrt{5}\\pi}{2}\\right)L_{m+1}-\\left(1+\\frac{\\sqrt{5}\\pi}{5}\\tan\\frac{\\sqrt{5}\\pi}{2}\\right)L_m",
        0,
        |m, prec| {
            // −γL_{m+1} + Σ ((n−1)L_{m+1} − nL_{m+2}) / (n(n²+n−1))
            let ctx = Ctx::new(prec);
            let offset = -(ctx.gamma() * ctx.int(lucas(m + 1)));
            cubic_lhs(-lucas(m + 1), -lucas(m), Some(offset), prec)
        },
        |m, prec| {
            let ctx = Ctx::new(prec);
            let c1 = digamma(&ctx.alpha())? - 1u32 - ctx.five_plus_sqrt5_tan()?;
            Ok(c1 * ctx.int(lucas(m + 1)) - ctx.aux1()? * ctx.int(lucas(m)))
        },
    ));
    v.push(over_m(
        "AUX-PSI-F",
        "(beta^{m+1} psi(alpha^2) - alpha^{m+1} psi(beta^2)) / sqrt5",
        "m >= 0",
        "F_{m+2}+\\left(\\frac{\\sqrt{5}\\pi}{5}\\tan\\frac{\\sqrt{5}\\pi}{2}\\right)F_m+\\left(\\frac{5+\\sqrt{5}}{10}\\pi\\tan\\frac{\\sqrt{5}\\pi}{2}-\\psi(\\alpha)\\right)F_{m+1}",
        0,
        |m, prec| {
            // γF_{m+1} + Σ ((1−n)F_{m+1} + nF_{m+2}) / (n(n²+n−1))
            let ctx = Ctx::new(prec);
            let offset = ctx.gamma() * ctx.int(fib(m + 1));
            cubic_lhs(fib(m + 1), fib(m), Some(offset), prec)
        },
        |m, prec| {
            let ctx = Ctx::new(prec);
            let tan_term = ctx.aux1()? - 1u32;
            let c1 = ctx.five_plus_sqrt5_tan()? - digamma(&ctx.alpha())?;
            Ok(ctx.int(fib(m + 2)) + tan_term * ctx.int(fib(m)) + c1 * ctx.int(fib(m + 1)))
        },
    ));
    v.push(fixed(
        "T2-L0",
        "sum (k+1)(zeta(k)-1)/k L_k",
        "5-2\\gamma-\\psi\\left(\\frac{1+\\sqrt{5}}{2}\\right)+\\ln\\left(-\\pi\\sec\\frac{\\sqrt{5}\\pi}{2}\\right)+\\frac{1+\\sqrt{5}}{2}\\pi\\tan\\frac{\\sqrt{5}\\pi}{2}",
        |prec| log_weighted_lhs(Seq::L, 0, prec),
        |prec| {
            let ctx = Ctx::new(prec);
            let arg = -ctx.mul(&ctx.pi(), &ctx.sec()?);
            if !(arg > 0) {
                return Err(Error::domain("T2-L0", "-pi sec(sqrt5 pi/2) > 0"));
            }
            let a = ctx.alpha();
            let tan_term = ctx.mul(&a, &ctx.pi()) * ctx.tan()?;
            Ok(Float::with_val(ctx.bits, 5u32 - ctx.gamma() * 2u32) - digamma(&a)? + arg.ln() + tan_term)
        },
    ));
    v.push(fixed(
        "T2-F0",
        "sum (k+1)(zeta(k)-1)/k F_k",
        "3-2\\gamma+\\frac{1}{\\sqrt{5}}\\ln\\left[\\frac{\\Gamma\\left(\\frac{3-\\sqrt{5}}{2}\\right)}{\\Gamma\\left(\\frac{3+\\sqrt{5}}{2}\\right)}\\right]+\\frac{5+\\sqrt{5}}{10}\\pi\\tan\\frac{\\sqrt{5}\\pi}{2}-\\psi\\left(\\frac{1+\\sqrt{5}}{2}\\right)",
        |prec| log_weighted_lhs(Seq::F, 0, prec),
        |prec| {
            let ctx = Ctx::new(prec);
            let s5 = ctx.sqrt5();
            let lo = Float::with_val(ctx.bits, 3u32 - &s5) / 2u32;
            let hi = Float::with_val(ctx.bits, &s5 + 3u32) / 2u32;
            let ratio = (ln_gamma(&lo)? - ln_gamma(&hi)?) / &s5;
            Ok(Float::with_val(ctx.bits, 3u32 - ctx.gamma() * 2u32) + ratio + ctx.five_plus_sqrt5_tan()?
                - digamma(&ctx.alpha())?)
        },
    ));

    // (2k + 1)(ζ(2k + 1) − 1) weights.
    v.push(over_m(
        "T3-F",
        "sum (2k+1)(zeta(2k+1)-1) F_{2k+m}",
        "m >= 0",
        "(1-\\gamma)F_m-\\frac{1}{2\\sqrt{5}}(\\omega(m,\\alpha)-\\omega(m,\\beta))",
        0,
        |m, prec| odd_weighted_lhs(Seq::F, m, prec),
        |m, prec| odd_weighted_rhs(Seq::F, m, prec),
    ));
    v.push(over_m(
        "T3-L",
        "sum (2k+1)(zeta(2k+1)-1) L_{2k+m}",
        "m >= 0",
        "(1-\\gamma)L_m-\\frac{1}{2}(\\omega(m,\\alpha)+\\omega(m,\\beta))",
        0,
        |m, prec| odd_weighted_lhs(Seq::L, m, prec),
        |m, prec| odd_weighted_rhs(Seq::L, m, prec),
    ));
    v.push(fixed(
        "EX3-F0",
        "sum (2k+1)(zeta(2k+1)-1) F_{2k}",
        "\\frac{1}{2\\sqrt{5}}(\\omega(0,\\beta)-\\omega(0,\\alpha))",
        |prec| odd_weighted_lhs(Seq::F, 0, prec),
        |prec| {
            let ctx = Ctx::new(prec);
            let (wa, wb) = omegas(&ctx, 0)?;
            Ok((wb - wa) / ctx.sqrt5() / 2u32)
        },
    ));
    v.push(fixed(
        "EX3-L0",
        "sum (2k+1)(zeta(2k+1)-1) L_{2k}",
        "2(1-\\gamma)-\\frac{1}{2}(\\omega(0,\\alpha)+\\omega(0,\\beta))",
        |prec| odd_weighted_lhs(Seq::L, 0, prec),
        |prec| {
            let ctx = Ctx::new(prec);
            let (wa, wb) = omegas(&ctx, 0)?;
            Ok(Float::with_val(ctx.bits, 1u32 - ctx.gamma()) * 2u32 - (wa + wb) / 2u32)
        },
    ));

    // Σ ζ(k)/(k b^k) with Fibonacci/Lucas bases.
    v.push(recip_entry(
        "T4-a",
        "sum_{k>=2} zeta(k) / (k (L_n F_m + F_n L_m)^k)",
        "n >= m >= 1",
        "\\ln\\Gamma\\left(\\frac{2F_{n+m}-1}{2F_{n+m}}\\right)-\\frac{\\gamma}{2F_{n+m}}",
        Params::MN,
        Recip::Log,
        |m, n| mn_ge("T4-a")(m, n),
        |m, n| id_double(n, m),
        |m, n| Ok(fib(n + m) * 2u32),
    ));
    v.push(recip_entry(
        "T4-b",
        "sum_{k>=2} zeta(k) / (k (F_n^2 + (-1)^{n+m-1} F_m^2)^k)",
        "n > m >= 1",
        "\\ln\\Gamma\\left(\\frac{F_{n-m}F_{n+m}-1}{F_{n-m}F_{n+m}}\\right)-\\frac{\\gamma}{F_{n-m}F_{n+m}}",
        Params::MN,
        Recip::Log,
        |m, n| need(m >= 1 && n > m, "T4-b", "n > m >= 1"),
        |m, n| id_catalan_like(n, m),
        |m, n| Ok(fib(n - m) * fib(n + m)),
    ));
    v.push(recip_entry(
        "T4-c",
        "sum_{k>=2} zeta(k) / (k (L_{n+m} + (-1)^m L_{n-m})^k)",
        "n >= m >= 1, L_m L_n >= 2",
        "\\ln\\Gamma\\left(\\frac{L_mL_n-1}{L_mL_n}\\right)-\\frac{\\gamma}{L_mL_n}",
        Params::MN,
        Recip::Log,
        |m, n| mn_ge("T4-c")(m, n),
        |m, n| id_lucas_lucas(n, m),
        |m, n| Ok(lucas(m) * lucas(n)),
    ));
    v.push(recip_entry(
        "T4-d",
        "sum_{k>=2} zeta(k) / (k (5 F_m F_n)^k)",
        "n >= m >= 1",
        "\\ln\\Gamma\\left(\\frac{L_{n+m}+(-1)^{m-1}L_{n-m}-1}{L_{n+m}+(-1)^{m-1}L_{n-m}}\\right)-\\frac{\\gamma}{L_{n+m}+(-1)^{m-1}L_{n-m}}",
        Params::MN,
        Recip::Log,
        |m, n| mn_ge("T4-d")(m, n),
        |m, n| Ok(fib(m) * fib(n) * 5u32),
        |m, n| id_five_fib(n, m),
    ));
    v.push(recip_entry(
        "T4-e",
        "sum_{k>=2} zeta(k) / (k (F_m L_n)^k)",
        "n >= m >= 1, F_m L_n >= 2",
        "\\ln\\Gamma\\left(\\frac{F_{n+m}+(-1)^{m-1}F_{n-m}-1}{F_{n+m}+(-1)^{m-1}F_{n-m}}\\right)-\\frac{\\gamma}{F_{n+m}+(-1)^{m-1}F_{n-m}}",
        Params::MN,
        Recip::Log,
        |m, n| mn_ge("T4-e")(m, n),
        |m, n| Ok(fib(m) * lucas(n)),
        |m, n| {
            let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
            Ok(fib(n + m) + fib(n - m) * sign)
        },
    ));
    v.push(recip_entry(
        "E19",
        "sum_{k>=2} zeta(k) / (k (5 F_n^2)^k)",
        "n >= 2",
        "\\ln\\Gamma\\left(\\frac{L_{2n}+2(-1)^{n-1}-1}{L_{2n}+2(-1)^{n-1}}\\right)-\\frac{\\gamma}{L_{2n}+2(-1)^{n-1}}",
        Params::N,
        Recip::Log,
        |_, n| need(n >= 2, "E19", "n >= 2"),
        |_, n| Ok(Integer::from(fib(n).square_ref()) * 5u32),
        |_, n| {
            let sign = if (n - 1) % 2 == 0 { 2 } else { -2 };
            Ok(lucas(2 * n) + sign)
        },
    ));
    v.push(recip_entry(
        "E20",
        "sum_{k>=2} zeta(k) / (k (F_n L_n)^k)",
        "n >= 2",
        "\\ln\\Gamma\\left(\\frac{F_{2n}-1}{F_{2n}}\\right)-\\frac{\\gamma}{F_{2n}}",
        Params::N,
        Recip::Log,
        |_, n| need(n >= 2, "E20", "n >= 2"),
        |_, n| Ok(fib(n) * lucas(n)),
        |_, n| Ok(fib(2 * n)),
    ));

    // Σ ζ(2k)/(k b^{2k}).
    v.push(recip_entry(
        "T5-a",
        "sum_{k>=1} zeta(2k) / (k (F_{n-m}^2 F_{n+m}^2)^k)",
        "n > m >= 1",
        "\\ln\\left(\\frac{\\pi}{F^2_{n}+(-1)^{n+m-1}F_m^2}\\right)+\\ln\\csc\\left(\\frac{\\pi}{F^2_{n}+(-1)^{n+m-1}F_m^2}\\right)",
        Params::MN,
        Recip::Even,
        |m, n| need(m >= 1 && n > m, "T5-a", "n > m >= 1"),
        |m, n| Ok(fib(n - m) * fib(n + m)),
        |m, n| id_catalan_like(n, m),
    ));
    v.push(recip_entry(
        "T5-b",
        "sum_{k>=1} zeta(2k) / (k (L_m^2 F_n^2)^k)",
        "n >= m >= 1, L_m F_n >= 2",
        "\\ln\\left(\\frac{\\pi}{F_{n+m}+(-1)^{m}F_{n-m}}\\right)+\\ln\\csc\\left(\\frac{\\pi}{F_{n+m}+(-1)^{m}F_{n-m}}\\right)",
        Params::MN,
        Recip::Even,
        |m, n| mn_ge("T5-b")(m, n),
        |m, n| Ok(lucas(m) * fib(n)),
        |m, n| id_lucas_fib(n, m),
    ));
    v.push(recip_entry(
        "T5-c",
        "sum_{k>=1} zeta(2k) / (4^k k F_{n+m}^{2k})",
        "n >= m >= 1",
        "\\ln\\left(\\frac{\\pi}{L_nF_m+F_nL_m}\\right)+\\ln\\csc\\left(\\frac{\\pi}{L_nF_m+F_nL_m}\\right)",
        Params::MN,
        Recip::Even,
        |m, n| mn_ge("T5-c")(m, n),
        |m, n| Ok(fib(n + m) * 2u32),
        |m, n| id_double(n, m),
    ));
    v.push(recip_entry(
        "T5-d",
        "sum_{k>=1} zeta(2k) / (k (L_m^2 L_n^2)^k)",
        "n >= m >= 1, L_m L_n >= 2",
        "\\ln\\left(\\frac{\\pi}{L_{n+m}+(-1)^{m}L_{n-m}}\\right)+\\ln\\csc\\left(\\frac{\\pi}{L_{n+m}+(-1)^{m}L_{n-m}}\\right)",
        Params::MN,
        Recip::Even,
        |m, n| mn_ge("T5-d")(m, n),
        |m, n| Ok(lucas(m) * lucas(n)),
        |m, n| id_lucas_lucas(n, m),
    ));
    v.push(recip_entry(
        "T5-e",
        "sum_{k>=1} zeta(2k) / (25^k k (F_m^2 F_n^2)^k)",
        "n >= m >= 1",
        "\\ln\\left(\\frac{\\pi}{L_{n+m}+(-1)^{m-1}L_{n-m}}\\right)+\\ln\\csc\\left(\\frac{\\pi}{L_{n+m}+(-1)^{m-1}L_{n-m}}\\right)",
        Params::MN,
        Recip::Even,
        |m, n| mn_ge("T5-e")(m, n),
        |m, n| Ok(fib(m) * fib(n) * 5u32),
        |m, n| id_five_fib(n, m),
    ));
    v.push(recip_entry(
        "E21",
        "sum_{k>=1} zeta(2k) / (k F_{2n}^{4k})",
        "n >= 2",
        "\\ln\\left(\\frac{\\pi}{F_{2n}^2}\\right)+\\ln\\csc\\frac{\\pi}{F^2_{2n}}",
        Params::N,
        Recip::Even,
        |_, n| need(n >= 2, "E21", "n >= 2"),
        |_, n| Ok(Integer::from(fib(2 * n).square_ref())),
        |_, n| Ok(Integer::from(fib(2 * n).square_ref())),
    ));
    v.push(recip_entry(
        "E22",
        "sum_{k>=1} zeta(2k) / (4^k k F_{2n}^{2k})",
        "n >= 1",
        "\\ln\\left(\\frac{\\pi}{2L_nF_n}\\right)+\\ln\\csc\\frac{\\pi}{2L_nF_n}",
        Params::N,
        Recip::Even,
        |_, n| need(n >= 1, "E22", "n >= 1"),
        |_, n| Ok(fib(2 * n) * 2u32),
        |_, n| Ok(lucas(n) * fib(n) * 2u32),
    ));
    v.push(recip_entry(
        "E23",
        "sum_{k>=1} zeta(2k) / (k (L_{2n} F_{2n})^{2k})",
        "n >= 1",
        "\\ln\\left(\\frac{\\pi}{F_{4n}}\\right)+\\ln\\csc\\frac{\\pi}{F_{4n}}",
        Params::N,
        Recip::Even,
        |_, n| need(n >= 1, "E23", "n >= 1"),
        |_, n| Ok(lucas(2 * n) * fib(2 * n)),
        |_, n| Ok(fib(4 * n)),
    ));

    // Odd zeta values over (2F_{2n})^{2k}.
    v.push(over_n(
        "T6",
        "sum_{k>=1} zeta(2k+1) / ((2k+1) 4^k F_{2n}^{2k})",
        "n >= 1",
        "F_{2n}\\left(\\ln\\Gamma\\left(\\frac{2L_nF_n-1}{2L_nF_n}\\right)-\\ln\\Gamma\\left(\\frac{2L_nF_n+1}{2L_nF_n}\\right)\\right)-\\gamma",
        1,
        |n, prec| recip_lhs(Recip::Odd, &(fib(2 * n) * 2u32), prec),
        |n, prec| {
            let ctx = Ctx::new(prec);
            let b = ctx.int(lucas(n) * fib(n) * 2u32);
            let lo = Float::with_val(ctx.bits, &b - 1u32) / &b;
            let hi = Float::with_val(ctx.bits, &b + 1u32) / &b;
            Ok((ln_gamma(&lo)? - ln_gamma(&hi)?) * ctx.int(fib(2 * n)) - ctx.gamma())
        },
    ));
    v.push(fixed(
        "E24",
        "sum_{k>=1} zeta(2k+1) / (4^k (2k+1)) = ln 2 - gamma",
        "\\sum_{k=1}^{\\infty}\\frac{\\zeta(2k+1)}{4^k(2k+1)}=\\ln 2-\\gamma",
        |prec| recip_lhs(Recip::Odd, &Integer::from(2), prec).expect("base 2 is admissible"),
        |prec| {
            let ctx = Ctx::new(prec);
            Ok(const_ln2(ctx.p) - ctx.gamma())
        },
    ));

    v
}
