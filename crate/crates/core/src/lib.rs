//! Planar Dembowski-Ostrom trinomials over extensions of odd-characteristic
//! finite fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: deterministic field towers `F_p ⊂ F_q ⊂ F_{q^n}` with
//!   Frobenius, relative trace and norm, and square tests.
//! - [`cyclotomic`]: exact arithmetic in `Z[ζ_p]` for character sums.
//! - [`dopoly`]: Dembowski-Ostrom polynomials, difference maps, Gram
//!   matrices, the two planarity oracles, character sums and linearized
//!   square structure.
//! - [`criteria`]: closed-form planarity conditions for the cubic and
//!   quartic trinomial families and their supporting statements.
//! - [`sweep`]: deterministic exhaustive/sampled sweeps that cross-check the
//!   criteria against the oracles, with CSV and JSON reports.
//! - [`cli`]: the `planar` command-line front end.
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod cli;
pub mod criteria;
pub mod cyclotomic;
pub mod dopoly;
mod error;
pub mod field;
pub mod sweep;

pub use cyclotomic::CycInt;
pub use dopoly::{DoPoly, GramMatrix, LinearizedPoly, PlanarityVerdict};
pub use error::{Error, Result};
pub use field::{build_field, FieldCtx, FieldElem, Subfield};
