//! Exact symbolic kernel and verifier for the Drinfel'd-twist deformation of
//! generalized Virasoro-like Lie algebras.
//!
//! The crate provides:
//! - [`scalar`]: arbitrary-precision rationals, lattice vectors, the
//!   antisymmetric pairing and generalized binomial coefficients;
//! - [`algebra`]: PBW-normal-form arithmetic in the enveloping algebra,
//!   including straightening, brackets, and shifted factorial products;
//! - [`series`]: truncated formal power series valued in tensor powers of the
//!   enveloping algebra, with slotwise structure maps and series inversion;
//! - [`hopf`]: the classical coproduct, counit, and antipode;
//! - [`twist`]: the twist family, the conjugated coproduct/antipode, and the
//!   closed forms they are verified against;
//! - [`parser`]: a small expression grammar over the generators;
//! - [`suites`] and [`report`]: named identity suites with deterministic
//!   text/JSON reports.
//!
//! All arithmetic is exact; every identity is checked as literal equality of
//! normal forms modulo a chosen power of the deformation parameter.
//!
//! ```
//! use virlike::{verify_twist, TwistContext};
//!
//! // T = d1, alpha = (1, 0), identities checked modulo t^5
//! let ctx = TwistContext::standard(4);
//! let report = verify_twist(&ctx);
//! assert!(report.passed());
//! ```

pub mod algebra;
pub mod hopf;
pub mod parser;
pub mod report;
pub mod scalar;
pub mod series;
pub mod suites;
pub mod twist;

pub use algebra::{falling_factorial, rising_factorial, straighten, AlgElement, Generator, PbwMonomial};
pub use hopf::{antipode0, coproduct0, counit0, verify_hopf0};
pub use parser::{eval_expr, parse_expr, ExprAst};
pub use report::{Check, CheckStatus, Report};
pub use scalar::{binom_general, pairing, weight, GroupVec, Rational};
pub use series::{binomial_series, SeriesTensor, StructureMap};
pub use suites::{run_suite, verify_lemma_3_4, verify_twist, SuiteId, SuiteParams};
pub use twist::{AntipodeConvention, CoproductVariant, TwistContext};

/// Errors surfaced by the kernel and the verifier.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("counit application requires arity >= 2")]
    CounitArity,
    #[error("series constant term is not the unit tensor")]
    NonUnitConstantTerm,
    #[error("inadmissible twist context: a1*alpha1 + a2*alpha2 = {got}, expected 1")]
    InadmissibleContext { got: String },
    #[error("alpha must be a nonzero lattice vector")]
    ZeroAlpha,
    #[error("beta must be a nonzero lattice vector")]
    ZeroBeta,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid report: {0}")]
    ReportFormat(String),
}
