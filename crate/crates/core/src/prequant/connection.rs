use nalgebra::{DMatrix, DVector, Vector2};

use super::bundle::{BundlePoint, Representative};
use super::BundleId;
use crate::algebra::{dirac_bar, gamma, gamma5, DiracSpinor, Spinor2, C64};
use crate::error::{Error, Result};
use crate::numerics::{d5, d5_vec};
use crate::phasespaces::{anyon_chart_jacobian, symplectic_eval, PhaseSpaceId, TangentVector};

/// Relative tangency slack accepted for total-space tangent vectors.
const TANGENCY_SLACK: f64 = 1e-7;

/// ω(w) without validation.
pub(crate) fn omega_raw(xi: &BundlePoint, w: &[f64]) -> f64 {
    match (&xi.bundle, &xi.rep) {
        (BundleId::Hopf { n }, Representative::Hopf { xi: s }) => {
            f64::from(*n) * s.inner(&Spinor2::from_real(w)).im
        }
        (BundleId::Dirac { n, m }, Representative::Dirac { psi, .. }) => {
            let dpsi = DiracSpinor::from_real(&w[3..11]);
            let i = psi.vector_current();
            f64::from(*n) * psi.bar_inner(&dpsi).im + m * (i[1] * w[0] + i[2] * w[1] + i[3] * w[2])
        }
        (BundleId::TrivialU1 { base }, Representative::Trivial { point, .. }) => {
            let c = &point.coords;
            match *base {
                PhaseSpaceId::FreeRel { m } => m * (c[4] * w[0] + c[5] * w[1] + c[6] * w[2]) + w[7],
                PhaseSpaceId::ThreeD { m, s } => {
                    let spin = 2.0 * s * m * (c[3] * w[4] - c[4] * w[3]) / (c[2] + 1.0);
                    m * (c[3] * w[0] + c[4] * w[1]) + spin + w[5]
                }
                _ => f64::NAN,
            }
        }
        (BundleId::Anyon { .. }, Representative::Anyon { point, .. }) => {
            let c = &point.coords;
            let dx = anyon_chart_jacobian(&[c[0], c[1]]) * Vector2::new(w[0], w[1]);
            c[2] * dx.x + c[3] * dx.y + w[4]
        }
        _ => f64::NAN,
    }
}

fn check_total_tangent(xi: &BundlePoint, w: &[f64]) -> Result<()> {
    let defect = xi.tangency_defect(w)?;
    let scale = (1.0 + w.iter().map(|x| x * x).sum::<f64>().sqrt())
        * (1.0 + xi.to_real().iter().map(|x| x * x).sum::<f64>());
    if defect > TANGENCY_SLACK * scale {
        return Err(Error::domain(format!("vector is not tangent to the total space (defect {defect:.3e})")));
    }
    Ok(())
}

/// Evaluates the connection one-form ω on a total-space tangent `w`, given in
/// the real coordinates of the representative (see [`BundlePoint::to_real`]).
pub fn connection_eval(b: &BundleId, xi: &BundlePoint, w: &[f64]) -> Result<f64> {
    if *b != xi.bundle {
        return Err(Error::domain("point belongs to a different bundle"));
    }
    xi.validate(1e-6)?;
    check_total_tangent(xi, w)?;
    Ok(omega_raw(xi, w))
}

/// Least-norm δψ with prescribed (δI, δJ) preserving a†b = 1/2.
///
/// The only kernel direction of (δI, δJ, δ(a†b)) is the phase iψ, so adding
/// the row ⟨iψ, δψ⟩ = 0 leaves a full-rank system whose least-squares
/// solution is the least-norm lift.
fn dirac_spin_lift(psi: &DiracSpinor, di: &[f64], dj: &[f64]) -> Result<Vec<f64>> {
    let v = psi.as_vector();
    let bar = dirac_bar(&v);
    let g5 = gamma5();
    let rows_i: Vec<_> = (0..4).map(|mu| bar * gamma(mu)).collect();
    let rows_j: Vec<_> = (0..4).map(|mu| bar * gamma(mu) * g5).collect();
    let (a, b) = (psi.upper(), psi.lower());
    let phase_dir = psi.scale(C64::new(0.0, 1.0)).to_real();
    let mut mat = DMatrix::<f64>::zeros(11, 8);
    for k in 0..8 {
        let mut e = [0.0; 8];
        e[k] = 1.0;
        let d = DiracSpinor::from_real(&e);
        let dv = d.as_vector();
        for mu in 0..4 {
            mat[(mu, k)] = 2.0 * (rows_i[mu] * dv)[(0, 0)].re;
            mat[(4 + mu, k)] = 2.0 * (rows_j[mu] * dv)[(0, 0)].re;
        }
        let c: C64 = d.upper().inner(&b) + a.inner(&d.lower());
        mat[(8, k)] = c.re;
        mat[(9, k)] = c.im;
        mat[(10, k)] = phase_dir[k];
    }
    let mut rhs = DVector::<f64>::zeros(11);
    for mu in 0..4 {
        rhs[mu] = di[mu];
        rhs[4 + mu] = dj[mu];
    }
    let mt = mat.transpose();
    let sol = (&mt * &mat)
        .cholesky()
        .ok_or_else(|| Error::inconsistent("spin lift system is singular"))?
        .solve(&(&mt * &rhs));
    let resid = (&mat * &sol - &rhs).norm();
    if resid > 1e-8 * (1.0 + rhs.norm()) {
        return Err(Error::domain(format!("base vector is not tangent (lift residual {resid:.3e})")));
    }
    Ok(sol.iter().copied().collect())
}

/// Horizontal lift of a base tangent vector to the total space at `xi`.
pub fn horizontal_lift_vector(xi: &BundlePoint, u: &TangentVector) -> Result<Vec<f64>> {
    let base = xi.project()?;
    if u.base.space != base.space || u.base.chart_distance(&base) > 1e-6 {
        return Err(Error::domain("tangent vector is not based at the projection of the point"));
    }
    let c = &u.components;
    let lift = match &xi.rep {
        Representative::Hopf { xi: s } => {
            // ½(u·σ)ξ projects to u and is already horizontal.
            let m = crate::algebra::sigma_dot(&nalgebra::Vector3::new(c[0], c[1], c[2])) * C64::from(0.5);
            Spinor2::from_vector(&(m * s.as_vector())).to_real().to_vec()
        }
        Representative::Dirac { psi, .. } => {
            let mut r = c[0..3].to_vec();
            r.extend(dirac_spin_lift(psi, &c[3..7], &c[7..11])?);
            r
        }
        Representative::Trivial { .. } | Representative::Anyon { .. } => {
            let mut r = c.clone();
            r.push(0.0);
            r
        }
    };
    let vert = xi.vertical();
    let scale = omega_raw(xi, &vert);
    if scale == 0.0 {
        return Ok(lift);
    }
    let k = omega_raw(xi, &lift) / scale;
    Ok(lift.iter().zip(&vert).map(|(l, v)| l - k * v).collect())
}

/// Returns (dω(ũ, ṽ), Ω(u, v)) where ũ, ṽ are horizontal lifts of the base
/// tangents u, v and dω is estimated by finite differences of step `h` on
/// the surface (a, b) ↦ retract(ξ + a ũ + b ṽ).
pub fn curvature_matches_symplectic(
    b: &BundleId,
    xi: &BundlePoint,
    u: &TangentVector,
    v: &TangentVector,
    h: f64,
) -> Result<(f64, f64)> {
    if *b != xi.bundle {
        return Err(Error::domain("point belongs to a different bundle"));
    }
    xi.validate(1e-6)?;
    if !(h > 0.0) {
        return Err(Error::domain("finite-difference step must be positive"));
    }
    let base = xi.project()?;
    let omega_base = symplectic_eval(&base, u, v)?;
    let lu = horizontal_lift_vector(xi, u)?;
    let lv = horizontal_lift_vector(xi, v)?;
    let origin = xi.to_real();
    let surface = |a: f64, c: f64| -> Result<BundlePoint> {
        let r: Vec<f64> = (0..origin.len()).map(|k| origin[k] + a * lu[k] + c * lv[k]).collect();
        xi.with_real(&r).retract()
    };
    let h_inner = 10.0 * h;
    // A_dir(a, c) = ω(∂_dir F) at F(a, c).
    let potential = |a: f64, c: f64, along_a: bool| -> Result<f64> {
        let p = surface(a, c)?;
        let tangent = d5_vec(
            |t| {
                let q = if along_a { surface(a + t, c)? } else { surface(a, c + t)? };
                Ok(q.to_real())
            },
            h_inner,
        )?;
        Ok(omega_raw(&p, &tangent))
    };
    let da_ac = d5(|t| potential(t, 0.0, false), h)?;
    let dc_aa = d5(|t| potential(0.0, t, true), h)?;
    Ok((da_ac - dc_aa, omega_base))
}
