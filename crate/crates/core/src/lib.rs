//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants.
//!
//! A Hopf algebra is stored as its multiplication tensor `C_{ij}^k`,
//! comultiplication tensor `D_i^{jk}`, counit vector `ξ` and (optionally)
//! antipode matrix `S`, all over the cyclotomic field ℚ(ζ_m). On top of that
//! the crate provides:
//!
//! * axiom verification, basis transport, duals and antipode solving ([`hopf`]);
//! * basis-independent invariants and orbit dimensions ([`invariants`]);
//! * degenerations along `φ + t·id` and diagonal families, with a
//!   rational-function oracle ([`degeneration`]);
//! * a catalog of the explicitly presented small Hopf algebras ([`catalog`]).

pub mod catalog;
pub mod cli;
pub mod degeneration;
mod error;
pub mod hopf;
pub mod invariants;
pub mod linalg;
pub mod random;
pub mod scalars;

pub use error::{Error, Result};
pub use hopf::{Hopf, HopfData, LinearMap, VerificationReport};
pub use scalars::{Conductor, CycScalar, Field, RatFunc};

/// Family data: structure constants that are rational functions of `t`.
pub type FamilyData = Hopf<RatFunc>;
