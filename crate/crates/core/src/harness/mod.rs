//! Verification engine and parameter sweeps.
//!
//! [`verify_one`] evaluates one (identity, parameters) cell: the series is
//! summed to half the tolerance, the closed form is evaluated at the same
//! working precision, and the cell passes iff
//! `|lhs − rhs| ≤ lhs_error_bound + tolerance`. [`sweep`] runs the Cartesian
//! product of catalog entries and parameter ranges on a thread pool and
//! orders the results by `(id, m, n)` afterwards, so output never depends on
//! scheduling.

mod report;

pub use report::{read_json_report, render_csv, render_json, write_report, Report, ReportFormat, ResultRecord};

use std::ops::RangeInclusive;

use rayon::prelude::*;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::catalog::{catalog_entries, entry, Expectation, IdentityEntry, ParamSet, Params};
use crate::error::{Error, Result};
use crate::mpreal::{Precision, Real};
use crate::series::{eval_series, DEFAULT_MAX_TERMS};

pub const DEFAULT_PRECISION_BITS: u32 = 256;
pub const DEFAULT_TOLERANCE: f64 = 1e-40;
pub const PRECISION_ENV: &str = "ZETAFIB_DEFAULT_PREC";

/// Default target precision: `ZETAFIB_DEFAULT_PREC` if set to a valid bit
/// count, else 256.
pub fn default_precision_bits() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b| b >= Precision::MIN_BITS)
        .unwrap_or(DEFAULT_PRECISION_BITS)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    DomainSkip,
    NonConverged,
}

#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub identity_id: String,
    pub params: ParamSet,
    pub lhs_value: Option<Real>,
    pub lhs_error_bound: Option<f64>,
    pub rhs_value: Option<Real>,
    pub abs_diff: Option<Real>,
    pub terms_used: u64,
    /// Target precision; computation ran with 64 extra guard bits.
    pub precision_bits: u32,
    pub status: Status,
    pub expected: Expectation,
    /// Violated constraint for `domain_skip`, error text for failures.
    pub note: Option<String>,
}

impl VerificationResult {
    fn empty(e: &IdentityEntry, params: ParamSet, precision_bits: u32) -> Self {
        Self {
            identity_id: e.id.to_string(),
            params,
            lhs_value: None,
            lhs_error_bound: None,
            rhs_value: None,
            abs_diff: None,
            terms_used: 0,
            precision_bits,
            status: Status::Fail,
            expected: e.expected,
            note: None,
        }
    }

    fn with_status(mut self, status: Status, note: impl Into<String>) -> Self {
        self.status = status;
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Entries to run; `None` means the whole catalog.
    pub ids: Option<Vec<String>>,
    pub m_range: RangeInclusive<i64>,
    pub n_range: RangeInclusive<i64>,
    pub precision_bits: u32,
    pub tolerance: f64,
    pub max_terms: u64,
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            ids: None,
            m_range: 0..=8,
            n_range: 1..=10,
            precision_bits: default_precision_bits(),
            tolerance: DEFAULT_TOLERANCE,
            max_terms: DEFAULT_MAX_TERMS,
            jobs: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m_range.is_empty() || self.n_range.is_empty() {
            return Err(Error::InvalidArgument("parameter ranges must be non-empty".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidArgument("jobs must be at least 1".into()));
        }
        Precision::try_new(self.precision_bits, Precision::DEFAULT_GUARD_BITS).map(|_| ())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub domain_skip: u64,
    pub non_converged: u64,
}

impl Summary {
    pub fn of(results: &[VerificationResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::DomainSkip => s.domain_skip += 1,
                Status::NonConverged => s.non_converged += 1,
            }
        }
        s
    }

    /// No `fail` and no `non_converged` results.
    pub fn is_clean(&self) -> bool {
        self.fail == 0 && self.non_converged == 0
    }
}

/// Verifies one cell. Errors only for an unknown id or an invalid config;
/// everything else is reported through the status.
pub fn verify_one(id: &str, p: &ParamSet, cfg: &SweepConfig) -> Result<VerificationResult> {
    let e = entry(id)?;
    cfg.validate()?;
    Ok(verify_entry(e, *p, cfg))
}

fn verify_entry(e: &IdentityEntry, p: ParamSet, cfg: &SweepConfig) -> VerificationResult {
    let prec = Precision::new(cfg.precision_bits);
    let out = VerificationResult::empty(e, p, cfg.precision_bits);
    let classify = |out: VerificationResult, err: Error| match err {
        Error::Domain { constraint, .. } => out.with_status(Status::DomainSkip, constraint),
        Error::NonConvergence { .. } => out.with_status(Status::NonConverged, err.to_string()),
        other => out.with_status(Status::Fail, other.to_string()),
    };
    if let Err(err) = e.check_domain(&p) {
        return classify(out, err);
    }
    let lhs = match e.build_lhs(&p, prec).and_then(|s| eval_series(&s, cfg.tolerance / 2.0, cfg.max_terms)) {
        Ok(v) => v,
        Err(err) => return classify(out, err),
    };
    let mut out = VerificationResult {
        terms_used: lhs.terms_used,
        lhs_error_bound: Some(lhs.abs_error_bound),
        ..out
    };
    let rhs = match e.build_rhs(&p, prec) {
        Ok(v) => v,
        Err(err) => {
            out.lhs_value = Some(lhs.value);
            // A closed-form error inside the domain is a catalog bug, not a skip.
            return out.with_status(Status::Fail, err.to_string());
        }
    };
    let bits = prec.working();
    let diff = Float::with_val(bits, &lhs.value - &rhs).abs();
    let allowed = Float::with_val(bits, lhs.abs_error_bound) + cfg.tolerance;
    out.status = if diff <= allowed { Status::Pass } else { Status::Fail };
    out.lhs_value = Some(lhs.value);
    out.rhs_value = Some(rhs);
    out.abs_diff = Some(diff);
    out
}

/// Every (entry, parameters) cell a sweep visits, in catalog order.
pub fn sweep_cells(cfg: &SweepConfig) -> Vec<(&'static IdentityEntry, ParamSet)> {
    let selected = |e: &IdentityEntry| match &cfg.ids {
        None => true,
        Some(ids) => ids.iter().any(|id| id == e.id),
    };
    let mut cells = Vec::new();
    for e in catalog_entries().iter().filter(|e| selected(e)) {
        match e.params {
            Params::None => cells.push((e, ParamSet::EMPTY)),
            Params::M => cells.extend(cfg.m_range.clone().map(|m| (e, ParamSet::m(m)))),
            Params::N => cells.extend(cfg.n_range.clone().map(|n| (e, ParamSet::n(n)))),
            Params::MN => {
                for m in cfg.m_range.clone() {
                    cells.extend(cfg.n_range.clone().map(|n| (e, ParamSet::mn(m, n))));
                }
            }
        }
    }
    cells
}

/// Runs the sweep; results are sorted by `(id, m, n)`.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<VerificationResult>> {
    cfg.validate()?;
    let cells = sweep_cells(cfg);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let mut results: Vec<VerificationResult> =
        pool.install(|| cells.par_iter().map(|(e, p)| verify_entry(e, *p, cfg)).collect());
    results.sort_by(|a, b| (&a.identity_id, a.params).cmp(&(&b.identity_id, b.params)));
    Ok(results)
}
