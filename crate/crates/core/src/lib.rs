//! Exact multi-centered dilatations `A[{M_i/a_i}]` of finitely presented
//! algebras over ℚ and 𝔽_p, with certificates for the isomorphisms between
//! them, a finite-ring oracle, congruence-group checks and the Rost double
//! deformation space.
//!
//! Start from [`dilatation::dilate`]; everything else verifies something
//! about its output.

pub mod error;
pub mod algebra;
pub mod cli;
pub mod congruence;
pub mod dilatation;
pub mod ideal;
pub mod oracle;
pub mod report;
pub mod rost;
pub mod poly;

pub use error::{Error, Result};
