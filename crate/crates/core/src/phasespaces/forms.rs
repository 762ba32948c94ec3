use nalgebra::{Vector2, Vector4};

use super::point::{anyon_chart_jacobian, v3, v4};
use super::{PhasePoint, PhaseSpaceId, TangentVector};
use crate::algebra::{epsilon_contract, levi_civita3, lower, mdot};
use crate::error::{Error, Result};
use crate::numerics::{d5, d5_vec};

/// Relative tangency slack accepted by [`symplectic_eval`]; vectors produced
/// by finite differences sit well inside it.
const TANGENCY_SLACK: f64 = 1e-7;

/// Ω_p(u, v) on raw ambient components; no validation.
pub(crate) fn omega(space: PhaseSpaceId, c: &[f64], u: &[f64], v: &[f64]) -> f64 {
    match space {
        PhaseSpaceId::SpinSphere { s } => s * v3(c, 0).dot(&v3(u, 0).cross(&v3(v, 0))),
        PhaseSpaceId::FreeRel { m } => -m * (v3(u, 0).dot(&v3(v, 4)) - v3(v, 0).dot(&v3(u, 4))),
        PhaseSpaceId::MassiveSpin { m, s } => {
            let orbital = -m * (v3(u, 0).dot(&v3(v, 4)) - v3(v, 0).dot(&v3(u, 4)));
            let (i, j) = (v4(c, 3), v4(c, 7));
            let spin = s
                * (epsilon_contract(&i, &j, &v4(u, 3), &v4(v, 3))
                    - epsilon_contract(&i, &j, &v4(u, 7), &v4(v, 7)));
            orbital + spin
        }
        PhaseSpaceId::Massless { s, chi } => {
            let (i, j) = (v4(c, 4), v4(c, 8));
            let helicity = -f64::from(chi)
                * s
                * (epsilon_contract(&i, &j, &v4(u, 4), &v4(v, 8))
                    - epsilon_contract(&i, &j, &v4(v, 4), &v4(u, 8)));
            helicity + mdot(&v4(u, 0), &v4(v, 4)) - mdot(&v4(v, 0), &v4(u, 4))
        }
        PhaseSpaceId::ThreeD { m, s } => {
            let ux = Vector2::new(u[0], u[1]);
            let vx = Vector2::new(v[0], v[1]);
            let orbital = -m * (ux.dot(&Vector2::new(v[3], v[4])) - vx.dot(&Vector2::new(u[3], u[4])));
            let i = [c[2], c[3], c[4]];
            let ui = [u[2], u[3], u[4]];
            let vi = [v[2], v[3], v[4]];
            let mut spin = 0.0;
            for a in 0..3 {
                for b in 0..3 {
                    for d in 0..3 {
                        spin += levi_civita3([a, b, d]) * i[a] * ui[b] * vi[d];
                    }
                }
            }
            orbital + 2.0 * s * m * spin
        }
        PhaseSpaceId::Anyon { .. } => {
            let jac = anyon_chart_jacobian(&[c[0], c[1]]);
            let ux = jac * Vector2::new(u[0], u[1]);
            let vx = jac * Vector2::new(v[0], v[1]);
            -(ux.dot(&Vector2::new(v[2], v[3])) - vx.dot(&Vector2::new(u[2], u[3])))
        }
    }
}

fn check_tangent(p: &PhasePoint, u: &TangentVector) -> Result<()> {
    if u.base.space != p.space || u.components.len() != p.coords.len() {
        return Err(Error::domain("tangent vector belongs to a different space"));
    }
    let scale = 1.0 + p.coords.iter().map(|x| x * x).sum::<f64>();
    if u.base.chart_distance(p) > TANGENCY_SLACK * scale {
        return Err(Error::domain("tangent vector is based at a different point"));
    }
    let norm = 1.0 + u.components.iter().map(|x| x * x).sum::<f64>().sqrt();
    let defect = p.tangency_defect(&u.components) / (norm * scale);
    if defect > TANGENCY_SLACK {
        return Err(Error::domain(format!("vector is not tangent (defect {defect:.3e})")));
    }
    Ok(())
}

/// Evaluates the symplectic form Ω_p(u, v).
pub fn symplectic_eval(p: &PhasePoint, u: &TangentVector, v: &TangentVector) -> Result<f64> {
    check_tangent(p, u)?;
    check_tangent(p, v)?;
    Ok(omega(p.space, &p.coords, &u.components, &v.components))
}

/// The degenerate direction V(a) of the massless form for a covector-like
/// 4-vector a with a·I = 0: δx = χ s a, δI = 0, δJ^μ = ε^{μνρσ} I_ν J_ρ a_σ.
pub fn null_directions_massless(p: &PhasePoint, a: &Vector4<f64>) -> Result<TangentVector> {
    let PhaseSpaceId::Massless { s, chi } = p.space else {
        return Err(Error::domain("null directions exist only on the massless space"));
    };
    let i = v4(&p.coords, 4);
    let j = v4(&p.coords, 8);
    let scale = (1.0 + a.norm()) * (1.0 + i.norm());
    if mdot(a, &i).abs() > 1e-9 * scale {
        return Err(Error::domain(format!("a·I = {:.3e}, must vanish", mdot(a, &i))));
    }
    // ε^{μνρσ} equals −ε_{μνρσ} componentwise.
    let (il, jl, al) = (lower(&i), lower(&j), lower(a));
    let mut dj = Vector4::zeros();
    for mu in 0..4 {
        let mut e = Vector4::zeros();
        e[mu] = 1.0;
        dj[mu] = -epsilon_contract(&e, &il, &jl, &al);
    }
    let mut comps = vec![0.0; 12];
    let dx = a * (f64::from(chi) * s);
    comps[0..4].copy_from_slice(dx.as_slice());
    comps[8..12].copy_from_slice(dj.as_slice());
    Ok(TangentVector { base: p.clone(), components: comps })
}

/// Finite-difference estimate of dΩ(u, v, w) at p.
///
/// The three tangents span a coordinate patch q ↦ project(p + Σ qₐuₐ); the
/// pulled-back form is differentiated with five-point central differences
/// of step `h`.
pub fn closedness_check(
    space: PhaseSpaceId,
    p: &PhasePoint,
    u: &TangentVector,
    v: &TangentVector,
    w: &TangentVector,
    h: f64,
) -> Result<f64> {
    if p.space != space {
        return Err(Error::domain("point does not belong to the given space"));
    }
    for t in [u, v, w] {
        check_tangent(p, t)?;
    }
    if !(h > 0.0) {
        return Err(Error::domain("finite-difference step must be positive"));
    }
    let dirs = [&u.components, &v.components, &w.components];
    // A wider inner step keeps the roundoff of the patch Jacobian well below
    // what the outer difference amplifies.
    let h_inner = 10.0 * h;
    let patch = |q: [f64; 3]| -> Result<Vec<f64>> {
        let mut c = p.coords.clone();
        for (k, d) in dirs.iter().enumerate() {
            for (ci, di) in c.iter_mut().zip(d.iter()) {
                *ci += q[k] * di;
            }
        }
        Ok(PhasePoint::project(space, &c)?.coords)
    };
    let pulled = |q: [f64; 3], a: usize, b: usize| -> Result<f64> {
        let partial = |k: usize| {
            d5_vec(
                |t| {
                    let mut q2 = q;
                    q2[k] += t;
                    patch(q2)
                },
                h_inner,
            )
        };
        Ok(omega(space, &patch(q)?, &partial(a)?, &partial(b)?))
    };
    let deriv = |a: usize, b: usize, c: usize| {
        d5(
            |t| {
                let mut q = [0.0; 3];
                q[a] = t;
                pulled(q, b, c)
            },
            h,
        )
    };
    Ok(deriv(0, 1, 2)? - deriv(1, 0, 2)? + deriv(2, 0, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use nalgebra::Vector3;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const SPACES: [PhaseSpaceId; 6] = [
        PhaseSpaceId::SpinSphere { s: 0.5 },
        PhaseSpaceId::FreeRel { m: 1.3 },
        PhaseSpaceId::MassiveSpin { m: 1.0, s: 1.5 },
        PhaseSpaceId::Massless { s: 1.0, chi: -1 },
        PhaseSpaceId::ThreeD { m: 0.8, s: 0.4 },
        PhaseSpaceId::Anyon { alpha: 0.7 },
    ];

    #[test]
    fn sphere_north_pole() {
        let p = PhasePoint::spin_sphere(0.5, Vector3::z(), 1e-9).unwrap();
        let u = TangentVector::new(&p, vec![1.0, 0.0, 0.0], 1e-9).unwrap();
        let v = TangentVector::new(&p, vec![0.0, 1.0, 0.0], 1e-9).unwrap();
        assert_eq!(symplectic_eval(&p, &u, &v).unwrap(), 0.5);
    }

    #[test]
    fn forms_are_closed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for space in SPACES {
            for _ in 0..5 {
                let p = sampling::point(&mut rng, space).unwrap();
                let t: Vec<_> = (0..3).map(|_| sampling::tangent(&mut rng, &p).unwrap()).collect();
                let d = closedness_check(space, &p, &t[0], &t[1], &t[2], 1e-4).unwrap();
                assert!(d.abs() < 1e-6, "{}: dΩ = {d:e}", space.name());
            }
        }
    }

    #[test]
    fn massless_null_directions_are_degenerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for chi in [1, -1] {
            let space = PhaseSpaceId::Massless { s: 1.5, chi };
            for _ in 0..10 {
                let p = sampling::point(&mut rng, space).unwrap();
                let i = v4(&p.coords, 4);
                let a = sampling::orthogonal_to(&mut rng, &i);
                let va = null_directions_massless(&p, &a).unwrap();
                let vi = null_directions_massless(&p, &i).unwrap();
                for _ in 0..5 {
                    let w = sampling::tangent(&mut rng, &p).unwrap();
                    assert!(symplectic_eval(&p, &va, &w).unwrap().abs() < 1e-9);
                    assert!(symplectic_eval(&p, &vi, &w).unwrap().abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn non_tangent_rejected() {
        let p = PhasePoint::spin_sphere(0.5, Vector3::z(), 1e-9).unwrap();
        let bad = TangentVector { base: p.clone(), components: vec![0.0, 0.0, 1.0] };
        let ok = TangentVector::new(&p, vec![1.0, 0.0, 0.0], 1e-9).unwrap();
        assert!(symplectic_eval(&p, &bad, &ok).is_err());
    }
}
