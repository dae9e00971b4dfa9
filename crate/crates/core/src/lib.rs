//! Knot Floer concordance invariants over F₂ and their knot-trace consequences.
//!
//! Start from a [`complex::KnotComplex`] (parsed from text or taken from
//! [`library`]), then compute [`invariants`], [`surgery`] cones, trace
//! profiles and verdicts in [`trace`], and closed-form bounds in [`formulas`].

pub mod app;
pub mod cache;
pub mod complex;
pub mod error;
pub mod f2;
pub mod formulas;
pub mod hook;
pub mod invariants;
pub mod library;
pub mod report;
pub mod surgery;
pub mod trace;

pub use complex::KnotComplex;
pub use error::{Error, Result};

/// Library version, recorded in reports and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
