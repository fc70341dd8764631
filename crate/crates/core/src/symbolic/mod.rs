//! Rewriting verifier for projective chart-map identities.

pub mod chart;
pub mod expr;
pub mod fixture;
pub mod rewrite;
pub mod verify;

pub use chart::ChartMap;
pub use expr::{Atom, Expr, Monomial, Poly, Signature, Word};
pub use rewrite::{Hypothesis, Rule, RuleSet, STEP_BUDGET};
pub use verify::{
    is_projective_identity, projectively_equal, verify_conjugation, verify_involution,
    verify_step2_normalization, DiagonalScalar,
};
