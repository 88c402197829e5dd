//! Exact algebra for trigonometric polynomials.
//!
//! A *trigonometric polynomial* is a finite sum `a_0 + a_1*cos(t) + b_1*sin(t)
//! + ... + a_k*cos(kt) + b_k*sin(kt)`; its *naive* counterpart is a finite sum
//! of powers `alpha_n*cos^n(t) + beta_n*sin^n(t)`. This crate converts between
//! the two forms exactly, reduces arbitrary polynomial expressions in
//! `(cos t, sin t)` to the unique canonical form `A(x) + y*B(x)` modulo the
//! Pythagorean relation `x^2 + y^2 - 1`, and decides constructively whether a
//! trigonometric polynomial is expressible in the naive form — producing
//! either the representation `P(cos t) + Q(sin t)` or the parity obstruction
//! that rules it out. The hyperbolic relation `x^2 - y^2 - 1` is supported by
//! the same quotient machinery.
//!
//! Coefficients live in the field of Gaussian rationals `Q(i)`, so every
//! operation is exact; floating point appears only in redundancy sampling.
//!
//! The crate is `no_std` (with `alloc`); IO, the expression CLI, and JSON
//! output live in the companion `trigpoly-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bipoly;
pub mod chebyshev;
pub mod gauss;
pub mod oracle;
pub mod parser;
pub mod quotient;
pub mod trig;
pub mod unipoly;

mod util;

pub use bipoly::BiPoly;
pub use chebyshev::{chebyshev, to_chebyshev_basis, ChebKind};
pub use gauss::{DivisionByZero, GaussRational};
pub use oracle::representability_oracle;
pub use quotient::{
    bezout_degree_bound, compare_on_curve, ideal_member, param_point, reduce, CanonicalForm,
    CurveComparison, Modulus, QuotientError,
};
pub use trig::{
    canonical_to_trig, decide_naive, identity_check, naive_to_standard, sample_check,
    trig_mul, trig_to_canonical, IdentityOutcome, IdentityWitness, NaiveDecision,
    NaiveRepresentation, NaiveTrigPoly, NotCircular, Obstruction, SampleReport, SampleVerdict,
    TrigPoly,
};
pub use unipoly::UniPoly;
