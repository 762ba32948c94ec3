//! Prequantization of classical phase spaces and the geometric
//! spin-statistics relation, verified numerically.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: spinors, the SU(2) → SO(3) and SL(2,C) → SO(3,1) double
//!   covers, Pauli and Dirac matrices.
//! * [`phasespaces`]: the six supported symplectic manifolds, tangent
//!   vectors, symplectic forms and their symmetry actions.
//! * [`prequant`]: the U(1) bundles with connection over those spaces,
//!   lifted group actions, Z_n quotients and pair classes of the combined
//!   two-particle bundle.
//! * [`holonomy`]: line holonomy, horizontal lifts and flux integrals.
//! * [`exchange`]: exchange paths along one-parameter subgroup orbits, the
//!   diagonal-crossing test, exchange phases and the statistics verdict.
//!
//! Conventions used throughout: Minkowski signature (+, −, −, −) with
//! `ε_{0123} = −1`; spatial indices are Euclidean (`p·dx = Σ p^i dx^i`);
//! two-forms evaluate as `(α∧β)(u, v) = α(u)β(v) − α(v)β(u)`; sphere
//! orientation is the outward normal with counterclockwise boundaries.

pub mod algebra;
pub mod error;
pub mod exchange;
pub mod phasespaces;
pub mod holonomy;
pub mod prequant;
mod numerics;
pub mod sampling;
pub mod tolerance;

pub use error::{Error, Result};
pub use tolerance::Tolerances;

/// Library version, recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
