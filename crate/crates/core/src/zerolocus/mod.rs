//! Zero loci of F-triangles over the unit square: per-`y` root profiles,
//! D-sequence Sturm counting, and checkers for the A3–A6 expectations.

mod bending;
mod dseq;
mod profile;
mod trace;
mod verify;

pub use bending::{find_bending, BendKind, BendingPoint};
pub use dseq::{
    count_roots_at, d_sequence, known_factors, oracle_count, sturm_count_at, CountReport, CountRoute,
    DSequence, SturmCount,
};
pub use profile::{profile_at, RootProfile};
pub use trace::{trace_curves, CurveTrace};
pub use verify::{
    default_grid, verify_a3, verify_a4, verify_a5, verify_a6, verify_all, A3Result, A4Result, A5Result,
    A6Result, BendingEntry, CheckSummary, ConjectureAReport, Failure, SignConvention, VerifyOptions, YCheck,
};

use crate::exactmath::{MathError, Rational};
use crate::ftriangle::FError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZeroError {
    #[error("degenerate y = {y}: {reason}")]
    Degenerate { y: Rational, reason: String },
    #[error("polynomial non-reduced as bivariate")]
    NonReducedBivariate,
    #[error("trace is zero; no D-sequence count")]
    ZeroTrace,
    #[error(transparent)]
    Triangle(#[from] FError),
    #[error(transparent)]
    Math(#[from] MathError),
}
