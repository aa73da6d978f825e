//! Certified arbitrary-precision verification of infinite series that mix
//! Fibonacci and Lucas numbers with values of the Riemann and Hurwitz zeta
//! functions.
//!
//! The crate is layered bottom-up:
//!
//! * [`mpreal`]: precision handling and cached constants (π, √5, α, β).
//! * [`sequences`]: exact Fibonacci/Lucas numbers over signed indices.
//! * [`specfun`]: lnΓ, ψ⁽ᵐ⁾, Riemann and Hurwitz ζ, γ and closed-form trig.
//! * [`series`]: partial summation with certified truncation bounds, plus
//!   the generating-function closed forms the identities are built from.
//! * [`catalog`]: every identity as an executable (series, closed form) pair.
//! * [`harness`]: verification, parameter sweeps and report output.

pub mod catalog;
pub mod error;
pub mod harness;
pub mod mpreal;
pub mod sequences;
pub mod series;
pub mod specfun;

pub use error::{Error, Result};
pub use mpreal::{Precision, Real};
