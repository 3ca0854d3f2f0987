//! Higher-rank graphs from polyhedral graphs.
//!
//! A polyhedral graph, once its faces are properly coloured, determines a
//! coloured directed graph (its quadrangle club) whose commuting squares
//! present a higher-rank graph. This crate constructs clubs, verifies the
//! axioms behind that presentation, computes fundamental groups from
//! spanning trees, and supports surgery, planarity testing, automorphism
//! search, and the worked example families.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod club;
pub mod export;
pub mod facecolour;
pub mod fixtures;
pub mod io;
pub mod pi1;
pub mod polyhedral;
pub mod skeleton;
pub mod surgery;
pub(crate) mod util;
