//! Exact computer algebra for Macdonald and Dunkl operators.
//!
//! The crate evaluates Macdonald difference operators, Dunkl operators and
//! t-binomials over exact coefficient rings, expands the Macdonald operators
//! in h under `q = e^h`, `t = e^{βh}`, and checks closed-form identities
//! between the expansion coefficients and Dunkl-type operators. Every check
//! is an exact comparison; a failure carries the exact nonzero residual.

pub mod error;
pub mod multipoly;
pub mod operators;
pub mod rings;
pub mod tbinom;
pub mod verify;

pub use error::{Error, Result};
