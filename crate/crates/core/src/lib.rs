//! Exact computation of branching cones, their Hilbert bases and saturation
//! verdicts for embedded pairs of reductive groups.

#![allow(clippy::needless_range_loop)]

pub mod admissible;
pub mod arith;
pub mod branching;
pub mod chevalley;
pub mod embedding;
pub mod error;
pub mod levimov;
pub mod lie;
pub mod pipeline;
pub mod polycone;

pub use error::{Error, Result};
