//! Split-octonion geometry toolkit.
//!
//! The eight-dimensional split octonions carry a norm of signature (4,4).
//! This crate implements the exact basis algebra ([`algebra`]), one-sided
//! rotor products and four-plane decompositions ([`rotor`]), the
//! noncompact-G2 automorphism families with their induced coordinate
//! transformations ([`autom`]), Cartan's fifteen generator operators
//! ([`generators`]), the zero-divisor structure ([`zerodiv`]), and the
//! kinematic formulas the geometry induces ([`kin`]).
//!
//! Every identity the library relies on is re-checkable at runtime through
//! the seeded suites in [`verify`].

// index loops over small fixed-size matrices read better than iterator chains
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod autom;
pub mod generators;
pub mod kin;
pub mod rotor;
pub mod verify;
pub mod zerodiv;

pub use algebra::SplitOctonion;

/// Absolute tolerance separating zero from nonzero in norm classification.
pub const TOL_ZERO: f64 = 1e-9;

/// Relative tolerance for algebraic identity checks.
pub const TOL_REL: f64 = 1e-12;
