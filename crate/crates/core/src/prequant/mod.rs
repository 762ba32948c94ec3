//! Prequantization bundles over the phase spaces.
//!
//! Each bundle is a quotient of a simple total space: unit spinors for the
//! spin sphere, constrained Dirac spinors (with a position) for the massive
//! spinning particle, a trivial product with U(1) for the spinless and 2+1
//! cases, and the universal cover of the punctured plane for anyons. Points
//! are stored as representatives; the relations are applied by the
//! canonicalization functions.
//!
//! For `Hopf` and `Dirac` the representative phase u acts on the fiber of
//! Y_n as uⁿ: shifting a representative by e^{iθ} moves the class by
//! e^{inθ}. For the trivial and anyon bundles the representative phase is
//! the fiber coordinate itself.

mod action;
mod bundle;
mod classes;
mod connection;

pub use action::{lifted_group_action, GroupElement};
pub use bundle::{dirac_project, hopf_project, BundlePoint, Representative};
pub use classes::{pair_canonicalize, permutation_lift, znq_canonicalize, PairClass};
pub use connection::{connection_eval, curvature_matches_symplectic, horizontal_lift_vector};
pub(crate) use connection::omega_raw;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phasespaces::PhaseSpaceId;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BundleId {
    /// Y_n = S³/Z_n over the spin sphere with s = n/2.
    Hopf { n: u32 },
    /// Y_n over the massive spinning particle with s = n/2 and mass m.
    Dirac { n: u32, m: f64 },
    /// Base × U(1) with connection p·dx (+ spin potential in 2+1) + dφ.
    TrivialU1 { base: PhaseSpaceId },
    /// Y_α over the punctured plane.
    Anyon { alpha: f64 },
}

impl BundleId {
    pub fn base(&self) -> PhaseSpaceId {
        match *self {
            BundleId::Hopf { n } => PhaseSpaceId::SpinSphere { s: f64::from(n) / 2.0 },
            BundleId::Dirac { n, m } => PhaseSpaceId::MassiveSpin { m, s: f64::from(n) / 2.0 },
            BundleId::TrivialU1 { base } => base,
            BundleId::Anyon { alpha } => PhaseSpaceId::Anyon { alpha },
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            BundleId::Hopf { .. } => Ok(()),
            BundleId::Dirac { n, .. } => {
                if n == 0 {
                    return Err(Error::domain("the Dirac bundle needs n ≥ 1"));
                }
                self.base().validate()
            }
            BundleId::TrivialU1 { base } => match base {
                PhaseSpaceId::FreeRel { .. } | PhaseSpaceId::ThreeD { .. } => base.validate(),
                _ => Err(Error::domain(format!("no trivial prequantization over {}", base.name()))),
            },
            BundleId::Anyon { alpha } => {
                if alpha.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain("alpha must be finite"))
                }
            }
        }
    }

    /// The n of the Z_n quotient, where there is one.
    pub fn zn(&self) -> Option<u32> {
        match *self {
            BundleId::Hopf { n } | BundleId::Dirac { n, .. } => Some(n),
            _ => None,
        }
    }

    /// Exponent by which a representative phase acts on the fiber.
    pub fn fiber_power(&self) -> i32 {
        match *self {
            BundleId::Hopf { n } | BundleId::Dirac { n, .. } => n as i32,
            _ => 1,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            BundleId::Hopf { n } => format!("hopf_{n}"),
            BundleId::Dirac { n, m } => format!("dirac_{n}(m={m})"),
            BundleId::TrivialU1 { base } => format!("trivial_u1({})", base.name()),
            BundleId::Anyon { alpha } => format!("anyon(alpha={alpha})"),
        }
    }
}
