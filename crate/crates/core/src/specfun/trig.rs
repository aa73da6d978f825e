//! Circular functions with a pole guard, used by the closed forms.

use rug::Float;

use crate::error::{Error, Result};
use crate::mpreal::{pow2, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Cot,
    Csc,
    Sec,
    Tan,
    CscSquared,
    SecSquared,
}

impl TrigKind {
    fn name(self) -> &'static str {
        match self {
            TrigKind::Cot => "cot",
            TrigKind::Csc => "csc",
            TrigKind::Sec => "sec",
            TrigKind::Tan => "tan",
            TrigKind::CscSquared => "csc^2",
            TrigKind::SecSquared => "sec^2",
        }
    }
}

/// Evaluates `kind(arg)` at `arg.prec()` bits.
///
/// Arguments whose denominator (sin for cot/csc, cos for tan/sec) is within
/// `2^{−prec/2}` of zero are rejected as poles.
pub fn trig_closed(kind: TrigKind, arg: &Real) -> Result<Real> {
    let bits = arg.prec();
    let (sin, cos) = arg.clone().sin_cos(Float::new(bits));
    let den = match kind {
        TrigKind::Cot | TrigKind::Csc | TrigKind::CscSquared => &sin,
        TrigKind::Tan | TrigKind::Sec | TrigKind::SecSquared => &cos,
    };
    let guard = pow2(64, -((bits / 2) as i32));
    if Float::with_val(64, den.abs_ref()) < guard {
        return Err(Error::pole(kind.name(), arg.to_f64()));
    }
    let v = match kind {
        TrigKind::Cot => Float::with_val(bits, &cos / &sin),
        TrigKind::Tan => Float::with_val(bits, &sin / &cos),
        TrigKind::Csc => Float::with_val(bits, sin.recip_ref()),
        TrigKind::Sec => Float::with_val(bits, cos.recip_ref()),
        TrigKind::CscSquared => Float::with_val(bits, sin.square_ref()).recip(),
        TrigKind::SecSquared => Float::with_val(bits, cos.square_ref()).recip(),
    };
    Ok(v)
}
