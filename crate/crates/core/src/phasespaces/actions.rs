use nalgebra::{Matrix2, Matrix3, Vector2, Vector3, Vector4};
use std::f64::consts::PI;

use super::point::{v3, v4};
use super::{PhasePoint, PhaseSpaceId, TangentVector};
use crate::algebra::{LorentzElement, SO3Element};
use crate::error::{Error, Result};

/// Symmetry-group elements acting on the phase spaces.
#[derive(Debug, Clone, PartialEq)]
pub enum SymmetryAction {
    /// SO(3) on the spin sphere.
    Rotation(SO3Element),
    /// Proper orthochronous Lorentz transformation followed by a translation
    /// (FreeRel, MassiveSpin, Massless). On the x⁰ = 0 slice spaces the image
    /// is moved back to the slice along I.
    Poincare { lorentz: LorentzElement, translation: Vector4<f64> },
    /// SO(2,1) ⋉ R³ on the 2+1 space, same slice convention.
    Planar { lorentz: Matrix3<f64>, translation: Vector3<f64> },
    /// Rotation of the punctured plane by β, lifted to the cover.
    AnyonRotation(f64),
    /// Deck transformation (x1, x2) ↦ (x1 + n, x2 + n).
    Deck(i64),
}

/// SO(2,1) rotation by θ in the spatial plane.
pub fn planar_rotation(theta: f64) -> Matrix3<f64> {
    let (s, c) = theta.sin_cos();
    Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c)
}

/// SO(2,1) boost of rapidity η along the planar direction at angle φ.
pub fn planar_boost(phi: f64, eta: f64) -> Matrix3<f64> {
    let (sh, ch) = (eta.sinh(), eta.cosh());
    let n = Vector2::new(phi.cos(), phi.sin());
    let mut m = Matrix3::identity();
    m[(0, 0)] = ch;
    for a in 0..2 {
        m[(0, a + 1)] = sh * n[a];
        m[(a + 1, 0)] = sh * n[a];
        for b in 0..2 {
            m[(a + 1, b + 1)] += (ch - 1.0) * n[a] * n[b];
        }
    }
    m
}

fn rot2(beta: f64) -> Matrix2<f64> {
    let (s, c) = beta.sin_cos();
    Matrix2::new(c, -s, s, c)
}

/// Returns (x', dx') for the slice map y = Λ(0, x) + C, x' = y − (y⁰/I'⁰) I',
/// given the already transformed I' and its variation.
fn slice_map<const N: usize>(
    y: &nalgebra::SVector<f64, N>,
    dy: &nalgebra::SVector<f64, N>,
    ip: &nalgebra::SVector<f64, N>,
    dip: &nalgebra::SVector<f64, N>,
) -> (nalgebra::SVector<f64, N>, nalgebra::SVector<f64, N>) {
    let lam = y[0] / ip[0];
    let dlam = dy[0] / ip[0] - y[0] * dip[0] / (ip[0] * ip[0]);
    (y - ip * lam, dy - ip * dlam - dip * lam)
}

impl SymmetryAction {
    fn check_space(&self, space: PhaseSpaceId) -> Result<()> {
        let ok = matches!(
            (self, space),
            (SymmetryAction::Rotation(_), PhaseSpaceId::SpinSphere { .. })
                | (
                    SymmetryAction::Poincare { .. },
                    PhaseSpaceId::FreeRel { .. } | PhaseSpaceId::MassiveSpin { .. } | PhaseSpaceId::Massless { .. }
                )
                | (SymmetryAction::Planar { .. }, PhaseSpaceId::ThreeD { .. })
                | (SymmetryAction::AnyonRotation(_) | SymmetryAction::Deck(_), PhaseSpaceId::Anyon { .. })
        );
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("group element does not act on {}", space.name())))
        }
    }

    /// Image of a point and, optionally, pushforward of ambient tangent components.
    fn map(&self, p: &PhasePoint, u: Option<&[f64]>) -> Result<(Vec<f64>, Vec<f64>)> {
        self.check_space(p.space)?;
        let c = &p.coords;
        let zero = vec![0.0; c.len()];
        let d = u.unwrap_or(&zero);
        let mut out = c.clone();
        let mut dout = d.to_vec();
        match self {
            SymmetryAction::Rotation(o) => {
                out[0..3].copy_from_slice(o.apply(&v3(c, 0)).as_slice());
                dout[0..3].copy_from_slice(o.apply(&v3(d, 0)).as_slice());
            }
            SymmetryAction::Poincare { lorentz, translation } => {
                let l = lorentz;
                if let PhaseSpaceId::Massless { .. } = p.space {
                    for k in 0..3 {
                        let at = 4 * k;
                        let mut img = l.apply(&v4(c, at));
                        if k == 0 {
                            img += translation;
                        }
                        out[at..at + 4].copy_from_slice(img.as_slice());
                        dout[at..at + 4].copy_from_slice(l.apply(&v4(d, at)).as_slice());
                    }
                } else {
                    let x4 = Vector4::new(0.0, c[0], c[1], c[2]);
                    let dx4 = Vector4::new(0.0, d[0], d[1], d[2]);
                    let y = l.apply(&x4) + translation;
                    let dy = l.apply(&dx4);
                    let ip = l.apply(&v4(c, 3));
                    let dip = l.apply(&v4(d, 3));
                    let (xs, dxs) = slice_map(&y, &dy, &ip, &dip);
                    out[0..3].copy_from_slice(&xs.as_slice()[1..4]);
                    dout[0..3].copy_from_slice(&dxs.as_slice()[1..4]);
                    out[3..7].copy_from_slice(ip.as_slice());
                    dout[3..7].copy_from_slice(dip.as_slice());
                    if let PhaseSpaceId::MassiveSpin { .. } = p.space {
                        out[7..11].copy_from_slice(l.apply(&v4(c, 7)).as_slice());
                        dout[7..11].copy_from_slice(l.apply(&v4(d, 7)).as_slice());
                    }
                }
            }
            SymmetryAction::Planar { lorentz, translation } => {
                let y = lorentz * Vector3::new(0.0, c[0], c[1]) + translation;
                let dy = lorentz * Vector3::new(0.0, d[0], d[1]);
                let ip = lorentz * Vector3::new(c[2], c[3], c[4]);
                let dip = lorentz * Vector3::new(d[2], d[3], d[4]);
                let (xs, dxs) = slice_map(&y, &dy, &ip, &dip);
                out = vec![xs[1], xs[2], ip[0], ip[1], ip[2]];
                dout = vec![dxs[1], dxs[2], dip[0], dip[1], dip[2]];
            }
            SymmetryAction::AnyonRotation(beta) => {
                let shift = beta / (2.0 * PI);
                out[0] += shift;
                out[1] += shift;
                let r = rot2(*beta);
                let pm = r * Vector2::new(c[2], c[3]);
                let dpm = r * Vector2::new(d[2], d[3]);
                out[2..4].copy_from_slice(pm.as_slice());
                dout[2..4].copy_from_slice(dpm.as_slice());
            }
            SymmetryAction::Deck(n) => {
                out[0] += *n as f64;
                out[1] += *n as f64;
            }
        }
        Ok((out, dout))
    }

    pub fn act(&self, p: &PhasePoint) -> Result<PhasePoint> {
        let (coords, _) = self.map(p, None)?;
        Ok(PhasePoint { space: p.space, coords })
    }

    /// Pushforward g_* u, based at g·p.
    pub fn pushforward(&self, u: &TangentVector) -> Result<TangentVector> {
        let (coords, components) = self.map(&u.base, Some(&u.components))?;
        Ok(TangentVector { base: PhasePoint { space: u.base.space, coords }, components })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_matrices_preserve_metric() {
        let eta = Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0));
        for m in [planar_boost(0.7, 1.3), planar_rotation(2.1), planar_boost(-2.0, 0.4) * planar_rotation(0.3)] {
            assert!((m.transpose() * eta * m - eta).norm() < 1e-12);
        }
    }

    #[test]
    fn wrong_space_is_rejected() {
        let p = PhasePoint::spin_sphere(0.5, Vector3::z(), 1e-9).unwrap();
        assert!(SymmetryAction::Deck(1).act(&p).is_err());
    }

    #[test]
    fn symplectic_form_is_invariant() {
        use crate::algebra::{sl2c_to_lorentz, su2_to_so3};
        use crate::phasespaces::symplectic_eval;
        use crate::sampling;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spaces = [
            PhaseSpaceId::SpinSphere { s: 1.0 },
            PhaseSpaceId::FreeRel { m: 1.3 },
            PhaseSpaceId::MassiveSpin { m: 0.9, s: 0.5 },
            PhaseSpaceId::Massless { s: 0.5, chi: 1 },
            PhaseSpaceId::ThreeD { m: 1.1, s: 0.5 },
            PhaseSpaceId::Anyon { alpha: 0.4 },
        ];
        for space in spaces {
            for _ in 0..20 {
                let g = match space {
                    PhaseSpaceId::SpinSphere { .. } => {
                        SymmetryAction::Rotation(su2_to_so3(&sampling::su2(&mut rng), 1e-9).unwrap())
                    }
                    PhaseSpaceId::ThreeD { .. } => SymmetryAction::Planar {
                        lorentz: planar_boost(rng.random_range(0.0..6.0), rng.random_range(0.0..1.5))
                            * planar_rotation(rng.random_range(0.0..6.0)),
                        translation: Vector3::new(sampling::normal(&mut rng), sampling::normal(&mut rng), sampling::normal(&mut rng)),
                    },
                    PhaseSpaceId::Anyon { .. } => SymmetryAction::AnyonRotation(rng.random_range(-4.0..4.0)),
                    _ => SymmetryAction::Poincare {
                        lorentz: sl2c_to_lorentz(&sampling::sl2c(&mut rng, 1.2), 1e-9).unwrap(),
                        translation: Vector4::from_vec(sampling::normal_vec(&mut rng, 4)),
                    },
                };
                let p = sampling::point(&mut rng, space).unwrap();
                let u = sampling::tangent(&mut rng, &p).unwrap();
                let v = sampling::tangent(&mut rng, &p).unwrap();
                let gp = g.act(&p).unwrap();
                gp.validate(1e-9).unwrap();
                let (gu, gv) = (g.pushforward(&u).unwrap(), g.pushforward(&v).unwrap());
                let before = symplectic_eval(&p, &u, &v).unwrap();
                let after = symplectic_eval(&gp, &gu, &gv).unwrap();
                assert!((before - after).abs() < 1e-8 * (1.0 + before.abs()), "{}: {before} vs {after}", space.name());
            }
        }
    }
}
