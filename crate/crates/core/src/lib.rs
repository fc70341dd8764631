//! Real structures on minimal ruled surfaces over real curves.
//!
//! The crate covers the topological types of real curves and of real ruled
//! surfaces, the conjugacy classification of fibered real structures on
//! `P(L + L_0)`, a deformation decision procedure by normal forms, a small
//! rewriting engine that checks projective chart identities, and an exact
//! model of the Gaussian elliptic curve.

pub mod batch;
pub mod bundle;
pub mod checks;
pub mod classify;
pub mod curve;
pub mod elliptic;
pub mod error;
pub mod surface;
pub mod symbolic;

pub use error::{Error, Result};
