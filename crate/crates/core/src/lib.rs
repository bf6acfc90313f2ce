//! Word problem, splitting and conjugacy in the first Grigorchuk group.
//!
//! Words over `a, b, c, d` are kept in reduced form ([`words`]). Triviality is
//! decided by recursive splitting ([`word_problem`]) and cross-checked against
//! the action on the binary tree ([`tree_action`]). Conjugacy is decided from
//! sets of conjugator cosets modulo a normal subgroup of index 16
//! ([`quotient`], [`conjugacy`]).

pub mod algebraic;
pub mod bench;
pub mod conjugacy;
pub mod engine;
pub mod error;
pub mod norm;
pub mod oracle;
pub mod quotient;
pub mod random;
pub mod selftest;
pub mod splitting;
pub mod tree_action;
pub mod word_problem;
pub mod words;

pub use algebraic::AlgebraicValue;
pub use conjugacy::QSet;
pub use engine::Engine;
pub use error::Error;
pub use quotient::{CosetId, QuotientGroup};
pub use words::{Letter, Parity, Word};

/// Exact norms: elements of `ℚ(α)` over arbitrary-precision rationals.
pub type Norm = AlgebraicValue<num_rational::BigRational>;
/// Norms with `f64` coefficients, for quick display.
pub type NormF64 = AlgebraicValue<f64>;
