use nalgebra::{Vector3, Vector4};
use serde::{Deserialize, Serialize};

use super::BundleId;
use crate::algebra::{DiracSpinor, Spinor2, C64};
use crate::error::{Error, Result};
use crate::phasespaces::{PhasePoint, PhaseSpaceId};

/// Representative of a point of a bundle's total space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Representative {
    Hopf { xi: Spinor2 },
    Dirac { x: Vector3<f64>, psi: DiracSpinor },
    /// Fiber coordinate e^{i phase}.
    Trivial { point: PhasePoint, phase: f64 },
    /// Fiber coordinate e^{i phase} e^{i winding α}; the winding integer keeps
    /// deck-transformation factors exact.
    Anyon { point: PhasePoint, phase: f64, winding: i64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BundlePoint {
    pub bundle: BundleId,
    pub rep: Representative,
}

/// x^i = ξ†σ^iξ on the sphere of spin s.
pub fn hopf_project(xi: &Spinor2, s: f64, tol: f64) -> Result<PhasePoint> {
    xi.validate(tol)?;
    let x = xi.bloch();
    Ok(PhasePoint { space: PhaseSpaceId::SpinSphere { s }, coords: x.as_slice().to_vec() })
}

/// (x, I, J) with I^μ = ψ̄γ^μψ and J^μ = ψ̄γ^μγ₅ψ.
pub fn dirac_project(x: &Vector3<f64>, psi: &DiracSpinor, m: f64, s: f64, tol: f64) -> Result<PhasePoint> {
    psi.validate(tol)?;
    let i = psi.vector_current();
    let j = psi.axial_current();
    let mut c = Vec::with_capacity(11);
    c.extend_from_slice(x.as_slice());
    c.extend_from_slice(i.as_slice());
    c.extend_from_slice(j.as_slice());
    Ok(PhasePoint { space: PhaseSpaceId::MassiveSpin { m, s }, coords: c })
}

fn cover_shift(point: &PhasePoint, k: i64) -> PhasePoint {
    let mut p = point.clone();
    p.coords[0] += k as f64;
    p.coords[1] += k as f64;
    p
}

impl BundlePoint {
    pub fn hopf(n: u32, xi: Spinor2, tol: f64) -> Result<Self> {
        xi.validate(tol)?;
        Ok(Self { bundle: BundleId::Hopf { n }, rep: Representative::Hopf { xi } })
    }

    pub fn dirac(n: u32, m: f64, x: Vector3<f64>, psi: DiracSpinor, tol: f64) -> Result<Self> {
        let bundle = BundleId::Dirac { n, m };
        bundle.validate()?;
        psi.validate(tol)?;
        Ok(Self { bundle, rep: Representative::Dirac { x, psi } })
    }

    pub fn trivial(point: PhasePoint, phase: f64, tol: f64) -> Result<Self> {
        let bundle = BundleId::TrivialU1 { base: point.space };
        bundle.validate()?;
        point.validate(tol)?;
        Ok(Self { bundle, rep: Representative::Trivial { point, phase } })
    }

    pub fn anyon(point: PhasePoint, phase: f64, winding: i64) -> Result<Self> {
        let PhaseSpaceId::Anyon { alpha } = point.space else {
            return Err(Error::domain("anyon bundle points need an anyon base point"));
        };
        point.validate(0.0)?;
        Ok(Self { bundle: BundleId::Anyon { alpha }, rep: Representative::Anyon { point, phase, winding } })
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        self.bundle.validate()?;
        match (&self.bundle, &self.rep) {
            (BundleId::Hopf { .. }, Representative::Hopf { xi }) => xi.validate(tol),
            (BundleId::Dirac { .. }, Representative::Dirac { x, psi }) => {
                if x.iter().any(|c| !c.is_finite()) {
                    return Err(Error::domain("non-finite position"));
                }
                psi.validate(tol)
            }
            (BundleId::TrivialU1 { base }, Representative::Trivial { point, phase }) => {
                if point.space != *base || !phase.is_finite() {
                    return Err(Error::domain("trivial-bundle representative does not match its bundle"));
                }
                point.validate(tol)
            }
            (BundleId::Anyon { alpha }, Representative::Anyon { point, phase, .. }) => {
                if point.space != (PhaseSpaceId::Anyon { alpha: *alpha }) || !phase.is_finite() {
                    return Err(Error::domain("anyon representative does not match its bundle"));
                }
                point.validate(tol)
            }
            _ => Err(Error::domain("representative does not match the bundle kind")),
        }
    }

    /// Image under the bundle projection.
    pub fn project(&self) -> Result<PhasePoint> {
        match (&self.bundle, &self.rep) {
            (BundleId::Hopf { n }, Representative::Hopf { xi }) => hopf_project(xi, f64::from(*n) / 2.0, 1e-6),
            (BundleId::Dirac { n, m }, Representative::Dirac { x, psi }) => {
                dirac_project(x, psi, *m, f64::from(*n) / 2.0, 1e-6)
            }
            (_, Representative::Trivial { point, .. }) | (_, Representative::Anyon { point, .. }) => Ok(point.clone()),
            _ => Err(Error::domain("representative does not match the bundle kind")),
        }
    }

    /// Number of real coordinates of the representative (excluding the winding).
    pub fn real_dim(&self) -> usize {
        match &self.rep {
            Representative::Hopf { .. } => 4,
            Representative::Dirac { .. } => 11,
            Representative::Trivial { point, .. } | Representative::Anyon { point, .. } => point.coords.len() + 1,
        }
    }

    pub fn to_real(&self) -> Vec<f64> {
        match &self.rep {
            Representative::Hopf { xi } => xi.to_real().to_vec(),
            Representative::Dirac { x, psi } => {
                let mut r = x.as_slice().to_vec();
                r.extend_from_slice(&psi.to_real());
                r
            }
            Representative::Trivial { point, phase } | Representative::Anyon { point, phase, .. } => {
                let mut r = point.coords.clone();
                r.push(*phase);
                r
            }
        }
    }

    /// Replaces the real coordinates without re-imposing constraints.
    pub fn with_real(&self, r: &[f64]) -> BundlePoint {
        let rep = match &self.rep {
            Representative::Hopf { .. } => Representative::Hopf { xi: Spinor2::from_real(r) },
            Representative::Dirac { .. } => Representative::Dirac {
                x: Vector3::new(r[0], r[1], r[2]),
                psi: DiracSpinor::from_real(&r[3..11]),
            },
            Representative::Trivial { point, .. } => {
                let k = point.coords.len();
                Representative::Trivial {
                    point: PhasePoint { space: point.space, coords: r[..k].to_vec() },
                    phase: r[k],
                }
            }
            Representative::Anyon { point, winding, .. } => Representative::Anyon {
                point: PhasePoint { space: point.space, coords: r[..4].to_vec() },
                phase: r[4],
                winding: *winding,
            },
        };
        BundlePoint { bundle: self.bundle, rep }
    }

    /// Moves a nearby representative back onto the total-space constraints.
    pub fn retract(&self) -> Result<BundlePoint> {
        let rep = match &self.rep {
            Representative::Hopf { xi } => Representative::Hopf { xi: Spinor2::normalized(xi.z1, xi.z2)? },
            Representative::Dirac { x, psi } => Representative::Dirac { x: *x, psi: psi.project()? },
            Representative::Trivial { point, phase } => Representative::Trivial {
                point: PhasePoint::project(point.space, &point.coords)?,
                phase: *phase,
            },
            Representative::Anyon { .. } => self.rep.clone(),
        };
        Ok(BundlePoint { bundle: self.bundle, rep })
    }

    /// Generator of the representative U(1) action, in real coordinates.
    pub fn vertical(&self) -> Vec<f64> {
        match &self.rep {
            Representative::Hopf { xi } => xi.scale(C64::new(0.0, 1.0)).to_real().to_vec(),
            Representative::Dirac { psi, .. } => {
                let mut r = vec![0.0; 3];
                r.extend_from_slice(&psi.scale(C64::new(0.0, 1.0)).to_real());
                r
            }
            Representative::Trivial { point, .. } | Representative::Anyon { point, .. } => {
                let mut r = vec![0.0; point.coords.len() + 1];
                *r.last_mut().unwrap() = 1.0;
                r
            }
        }
    }

    /// The representative multiplied by e^{iθ}.
    pub fn shift_phase(&self, theta: f64) -> BundlePoint {
        let rep = match &self.rep {
            Representative::Hopf { xi } => Representative::Hopf { xi: xi.phase(theta) },
            Representative::Dirac { x, psi } => Representative::Dirac { x: *x, psi: psi.phase(theta) },
            Representative::Trivial { point, phase } => {
                Representative::Trivial { point: point.clone(), phase: phase + theta }
            }
            Representative::Anyon { point, phase, winding } => {
                Representative::Anyon { point: point.clone(), phase: phase + theta, winding: *winding }
            }
        };
        BundlePoint { bundle: self.bundle, rep }
    }

    /// For anyon points: (Δphase, Δwinding) with other = e^{iΔphase} e^{iΔwinding α}·self
    /// after moving `other` to the same sheet of the cover.
    pub fn anyon_offset(&self, other: &BundlePoint, tol: f64) -> Result<(f64, i64)> {
        let (
            Representative::Anyon { point: p, phase: f1, winding: w1 },
            Representative::Anyon { point: q, phase: f2, winding: w2 },
        ) = (&self.rep, &other.rep)
        else {
            return Err(Error::domain("anyon offset needs two anyon points"));
        };
        let k = (q.coords[0] - p.coords[0]).round() as i64;
        let q0 = cover_shift(q, -k);
        let dist = q0.coords.iter().zip(&p.coords).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if dist > tol {
            return Err(Error::domain(format!("points lie over different base points (distance {dist:.3e})")));
        }
        Ok((f2 - f1, w2 - k - w1))
    }

    /// θ with other = e^{iθ}·self as representatives, for points over the
    /// same base point (within `tol` in the chart).
    pub fn phase_offset(&self, other: &BundlePoint, tol: f64) -> Result<f64> {
        if self.bundle != other.bundle {
            return Err(Error::domain("points belong to different bundles"));
        }
        match (&self.rep, &other.rep) {
            (Representative::Hopf { xi }, Representative::Hopf { xi: eta }) => {
                let d = (xi.bloch() - eta.bloch()).norm();
                if d > tol {
                    return Err(Error::domain(format!("points lie over different base points (distance {d:.3e})")));
                }
                Ok(xi.inner(eta).arg())
            }
            (Representative::Dirac { x, psi }, Representative::Dirac { x: y, psi: chi }) => {
                let base = self.project()?.chart_distance(&other.project()?);
                if base > tol || (x - y).norm() > tol {
                    return Err(Error::domain(format!("points lie over different base points (distance {base:.3e})")));
                }
                Ok(psi.bar_inner(chi).arg())
            }
            (Representative::Trivial { point: p, phase: f1 }, Representative::Trivial { point: q, phase: f2 }) => {
                let d = p.chart_distance(q);
                if d > tol {
                    return Err(Error::domain(format!("points lie over different base points (distance {d:.3e})")));
                }
                Ok(f2 - f1)
            }
            (Representative::Anyon { .. }, Representative::Anyon { .. }) => {
                let BundleId::Anyon { alpha } = self.bundle else { unreachable!() };
                let (dphi, dw) = self.anyon_offset(other, tol)?;
                Ok(dphi + dw as f64 * alpha)
            }
            _ => Err(Error::domain("representative does not match the bundle kind")),
        }
    }

    /// Residual of the linearized total-space constraints for a real tangent `w`.
    pub fn tangency_defect(&self, w: &[f64]) -> Result<f64> {
        if w.len() != self.real_dim() {
            return Err(Error::domain("tangent has wrong number of components"));
        }
        Ok(match &self.rep {
            Representative::Hopf { xi } => xi.inner(&Spinor2::from_real(w)).re.abs(),
            Representative::Dirac { psi, .. } => {
                // δ(a†b) = δa†b + a†δb must vanish.
                let d = DiracSpinor::from_real(&w[3..11]);
                (d.upper().inner(&psi.lower()) + psi.upper().inner(&d.lower())).norm()
            }
            Representative::Trivial { point, .. } | Representative::Anyon { point, .. } => {
                point.tangency_defect(&w[..point.coords.len()])
            }
        })
    }

    /// Image of the Dirac position and current vectors, for diagnostics.
    pub fn dirac_currents(&self) -> Option<(Vector4<f64>, Vector4<f64>)> {
        match &self.rep {
            Representative::Dirac { psi, .. } => Some((psi.vector_current(), psi.axial_current())),
            _ => None,
        }
    }
}
