use nalgebra::{Matrix3, Vector3, Vector4};
use serde::{Deserialize, Serialize};

use super::bundle::{BundlePoint, Representative};
use super::BundleId;
use crate::algebra::{sl2c_to_lorentz, su2_to_so3, LorentzElement, SL2CElement, SU2Element};
use crate::error::{Error, Result};
use crate::phasespaces::{PhasePoint, PhaseSpaceId, SymmetryAction};

/// Group elements that act on bundles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupElement {
    /// SU(2): ξ ↦ αξ on Hopf bundles; rotations on Dirac bundles.
    Su2 { alpha: SU2Element },
    /// SL(2,C) ⋉ R⁴ on Dirac bundles.
    Sl2c { alpha: SL2CElement, translation: Vector4<f64> },
    /// Poincaré group on the spinless trivial bundle.
    Poincare { lorentz: LorentzElement, translation: Vector4<f64> },
    /// SO(2,1) ⋉ R³ on the 2+1 trivial bundle.
    Planar { lorentz: Matrix3<f64>, translation: Vector3<f64> },
    /// Rotation of the punctured plane by β.
    AnyonRotation { beta: f64 },
    /// Deck transformation by n full turns.
    Deck { n: i64 },
    /// Fiber element e^{iθ}.
    Fiber { theta: f64 },
}

impl GroupElement {
    /// The induced action on the base, or `None` for fiber elements.
    pub fn base_action(&self, b: &BundleId) -> Result<Option<SymmetryAction>> {
        let tol = 1e-8;
        Ok(match (self, b) {
            (GroupElement::Su2 { alpha }, BundleId::Hopf { .. }) => {
                Some(SymmetryAction::Rotation(su2_to_so3(alpha, tol)?))
            }
            (GroupElement::Su2 { alpha }, BundleId::Dirac { .. }) => Some(SymmetryAction::Poincare {
                lorentz: sl2c_to_lorentz(&SL2CElement::from_su2(alpha), tol)?,
                translation: Vector4::zeros(),
            }),
            (GroupElement::Sl2c { alpha, translation }, BundleId::Dirac { .. }) => Some(SymmetryAction::Poincare {
                lorentz: sl2c_to_lorentz(alpha, tol)?,
                translation: *translation,
            }),
            (GroupElement::Poincare { lorentz, translation }, BundleId::TrivialU1 { base: PhaseSpaceId::FreeRel { .. } }) => {
                Some(SymmetryAction::Poincare { lorentz: *lorentz, translation: *translation })
            }
            (GroupElement::Planar { lorentz, translation }, BundleId::TrivialU1 { base: PhaseSpaceId::ThreeD { .. } }) => {
                Some(SymmetryAction::Planar { lorentz: *lorentz, translation: *translation })
            }
            (GroupElement::AnyonRotation { beta }, BundleId::Anyon { .. }) => Some(SymmetryAction::AnyonRotation(*beta)),
            (GroupElement::Deck { n }, BundleId::Anyon { .. }) => Some(SymmetryAction::Deck(*n)),
            (GroupElement::Fiber { .. }, _) => None,
            _ => return Err(Error::domain(format!("group element does not act on {}", b.name()))),
        })
    }
}

/// Slice parameter λ = y⁰ / I'⁰ by which the boosted point is slid back to
/// x⁰ = 0 along I'. The fiber is shifted by −mλ to keep the connection.
fn slice_parameter(y0: f64, i0: f64) -> f64 {
    y0 / i0
}

/// Acts with `g` on a bundle point.
pub fn lifted_group_action(b: &BundleId, g: &GroupElement, xi: &BundlePoint) -> Result<BundlePoint> {
    if *b != xi.bundle {
        return Err(Error::domain("point belongs to a different bundle"));
    }
    let base_action = g.base_action(b)?;
    match (g, &xi.rep) {
        (GroupElement::Fiber { theta }, _) => {
            let k = b.fiber_power();
            if k == 0 {
                return Err(Error::Unsupported("the fiber of Y_0 carries no U(1) action".into()));
            }
            Ok(xi.shift_phase(theta / f64::from(k)))
        }
        (GroupElement::Su2 { alpha }, Representative::Hopf { xi: s }) => {
            Ok(BundlePoint { bundle: *b, rep: Representative::Hopf { xi: alpha.act(s) } })
        }
        (GroupElement::Su2 { alpha }, Representative::Dirac { .. }) => lifted_group_action(
            b,
            &GroupElement::Sl2c { alpha: SL2CElement::from_su2(alpha), translation: Vector4::zeros() },
            xi,
        ),
        (GroupElement::Sl2c { alpha, translation }, Representative::Dirac { x, psi }) => {
            let BundleId::Dirac { n, m } = *b else { unreachable!() };
            let lorentz = sl2c_to_lorentz(alpha, 1e-8)?;
            let y = lorentz.apply(&Vector4::new(0.0, x.x, x.y, x.z)) + translation;
            let moved = alpha.act_dirac(psi);
            let ip = moved.vector_current();
            let lambda = slice_parameter(y[0], ip[0]);
            let xs = Vector3::new(y[1] - lambda * ip[1], y[2] - lambda * ip[2], y[3] - lambda * ip[3]);
            let psi2 = moved.phase(-m * lambda / f64::from(n));
            Ok(BundlePoint { bundle: *b, rep: Representative::Dirac { x: xs, psi: psi2 } })
        }
        (GroupElement::Poincare { lorentz, translation }, Representative::Trivial { point, phase }) => {
            let PhaseSpaceId::FreeRel { m } = point.space else { unreachable!() };
            let x4 = Vector4::new(0.0, point.coords[0], point.coords[1], point.coords[2]);
            let y0 = (lorentz.apply(&x4) + translation)[0];
            let i0 = lorentz.apply(&point.momentum())[0];
            let lambda = slice_parameter(y0, i0);
            let image = base_action.expect("base action").act(point)?;
            Ok(BundlePoint { bundle: *b, rep: Representative::Trivial { point: image, phase: phase - m * lambda } })
        }
        (GroupElement::Planar { lorentz, translation }, Representative::Trivial { point, phase }) => {
            let PhaseSpaceId::ThreeD { m, .. } = point.space else { unreachable!() };
            let c = &point.coords;
            let y0 = (lorentz * Vector3::new(0.0, c[0], c[1]) + translation)[0];
            let i0 = (lorentz * Vector3::new(c[2], c[3], c[4]))[0];
            let lambda = slice_parameter(y0, i0);
            let image = base_action.expect("base action").act(point)?;
            Ok(BundlePoint { bundle: *b, rep: Representative::Trivial { point: image, phase: phase - m * lambda } })
        }
        (GroupElement::AnyonRotation { .. }, Representative::Anyon { point, phase, winding }) => {
            let image = base_action.expect("base action").act(point)?;
            Ok(BundlePoint { bundle: *b, rep: Representative::Anyon { point: image, phase: *phase, winding: *winding } })
        }
        (GroupElement::Deck { n }, Representative::Anyon { point, phase, winding }) => {
            // (x̃, ψ) ↦ (n·x̃, e^{inα}ψ): the winding integer carries e^{inα} exactly.
            let image: PhasePoint = base_action.expect("base action").act(point)?;
            Ok(BundlePoint {
                bundle: *b,
                rep: Representative::Anyon { point: image, phase: *phase, winding: winding + n },
            })
        }
        _ => Err(Error::domain(format!("group element does not act on {}", b.name()))),
    }
}
