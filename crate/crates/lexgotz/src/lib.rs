//! Exact combinatorics of lexsegment monomial ideals.
//!
//! The crate decides, with integer arithmetic only, whether a lexsegment
//! ideal is Gotzmann, whether the segment is completely lexsegment, whether
//! the ideal is componentwise lexsegment, whether it has linear quotients,
//! and whether its Taylor complex is a minimal free resolution. Closed-form
//! criteria are paired with brute-force oracles so every answer can be
//! cross-checked independently.

pub mod classify;
pub mod error;
pub mod ideal;
pub mod macaulay;
pub mod monomial;
pub mod verify;

pub use error::{Error, Result};
