//! The six supported symplectic phase spaces.
//!
//! Points carry redundant ambient coordinates (3- and 4-vectors subject to
//! constraints) rather than minimal charts; [`PhasePoint::project`] puts a
//! perturbed point back on its constraint surface. The time coordinate is
//! fixed at x⁰ = 0 for `FreeRel`, `MassiveSpin` and `ThreeD`.
//!
//! Ambient layouts (`coords`):
//!
//! | space        | layout                         | dim |
//! |--------------|--------------------------------|-----|
//! | SpinSphere   | x (3)                          | 3   |
//! | FreeRel      | x (3), I (4)                   | 7   |
//! | MassiveSpin  | x (3), I (4), J (4)            | 11  |
//! | Massless     | x (4), I (4), J (4)            | 12  |
//! | ThreeD       | x (2), I (3)                   | 5   |
//! | Anyon        | cover (x1, x2), momentum (2)   | 4   |

mod actions;
mod forms;
mod point;

pub use actions::{planar_boost, planar_rotation, SymmetryAction};
pub use forms::{closedness_check, null_directions_massless, symplectic_eval};
pub use point::{anyon_chart, anyon_chart_jacobian, PhasePoint, TangentVector};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhaseSpaceId {
    /// S² with Ω = ½ s ε_{ijk} x^i dx^j ∧ dx^k.
    SpinSphere { s: f64 },
    /// Spinless relativistic particle, Ω = m dx^μ ∧ dI_μ.
    FreeRel { m: f64 },
    /// Massive particle with spin: R⁶ × S².
    MassiveSpin { m: f64, s: f64 },
    /// Massless particle of helicity χ = ±1.
    Massless { s: f64, chi: i8 },
    /// Relativistic particle in 2+1 dimensions.
    ThreeD { m: f64, s: f64 },
    /// Planar particle on the punctured plane with statistics parameter α.
    Anyon { alpha: f64 },
}

impl PhaseSpaceId {
    pub fn validate(&self) -> Result<()> {
        let finite_pos = |v: f64, name: &str| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!("{name} must be positive, got {v}")))
            }
        };
        match *self {
            PhaseSpaceId::SpinSphere { s } => {
                if s >= 0.0 && s.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain(format!("spin must be non-negative, got {s}")))
                }
            }
            PhaseSpaceId::FreeRel { m } => finite_pos(m, "mass"),
            PhaseSpaceId::MassiveSpin { m, s } => {
                finite_pos(m, "mass")?;
                finite_pos(s, "spin")
            }
            PhaseSpaceId::Massless { s, chi } => {
                finite_pos(s, "spin")?;
                if chi == 1 || chi == -1 {
                    Ok(())
                } else {
                    Err(Error::domain(format!("helicity must be ±1, got {chi}")))
                }
            }
            PhaseSpaceId::ThreeD { m, s } => {
                finite_pos(m, "mass")?;
                if s.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain("spin must be finite"))
                }
            }
            PhaseSpaceId::Anyon { alpha } => {
                if alpha.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain("alpha must be finite"))
                }
            }
        }
    }

    /// Number of ambient coordinates.
    pub fn ambient_dim(&self) -> usize {
        match self {
            PhaseSpaceId::SpinSphere { .. } => 3,
            PhaseSpaceId::FreeRel { .. } => 7,
            PhaseSpaceId::MassiveSpin { .. } => 11,
            PhaseSpaceId::Massless { .. } => 12,
            PhaseSpaceId::ThreeD { .. } => 5,
            PhaseSpaceId::Anyon { .. } => 4,
        }
    }

    /// Dimension of the constraint surface.
    pub fn dim(&self) -> usize {
        match self {
            PhaseSpaceId::SpinSphere { .. } => 2,
            PhaseSpaceId::FreeRel { .. } => 6,
            PhaseSpaceId::MassiveSpin { .. } => 8,
            PhaseSpaceId::Massless { .. } => 9,
            PhaseSpaceId::ThreeD { .. } => 4,
            PhaseSpaceId::Anyon { .. } => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PhaseSpaceId::SpinSphere { .. } => "spin_sphere",
            PhaseSpaceId::FreeRel { .. } => "free_rel",
            PhaseSpaceId::MassiveSpin { .. } => "massive_spin",
            PhaseSpaceId::Massless { .. } => "massless",
            PhaseSpaceId::ThreeD { .. } => "three_d",
            PhaseSpaceId::Anyon { .. } => "anyon",
        }
    }

    /// Same kind of space with the same parameters (exact comparison).
    pub fn same_as(&self, other: &PhaseSpaceId) -> bool {
        self == other
    }
}
