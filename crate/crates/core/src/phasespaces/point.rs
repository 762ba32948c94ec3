use nalgebra::{Matrix2, Vector2, Vector3, Vector4};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::PhaseSpaceId;
use crate::algebra::mdot;
use crate::error::{Error, Result};

/// A point of one of the supported phase spaces, in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub space: PhaseSpaceId,
    pub coords: Vec<f64>,
}

/// A tangent vector at `base`, in the same ambient coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangentVector {
    pub base: PhasePoint,
    pub components: Vec<f64>,
}

pub(crate) fn v3(c: &[f64], at: usize) -> Vector3<f64> {
    Vector3::new(c[at], c[at + 1], c[at + 2])
}

pub(crate) fn v4(c: &[f64], at: usize) -> Vector4<f64> {
    Vector4::new(c[at], c[at + 1], c[at + 2], c[at + 3])
}

fn put(c: &mut [f64], at: usize, v: &[f64]) {
    c[at..at + v.len()].copy_from_slice(v);
}

/// Unit timelike, future-pointing vector with the given spatial part.
fn on_hyperboloid4(spatial: &Vector3<f64>) -> Vector4<f64> {
    Vector4::new((1.0 + spatial.norm_squared()).sqrt(), spatial.x, spatial.y, spatial.z)
}

/// Cartesian position (x, y) on the punctured plane for cover coordinates
/// (x1, x2): radius e^{(x1 − x2)/2}, polar angle π(x1 + x2).
///
/// The deck generator (x1, x2) → (x1 + 1, x2 + 1) is then a full
/// counterclockwise turn about the puncture.
pub fn anyon_chart(cover: &[f64; 2]) -> Vector2<f64> {
    let r = (0.5 * (cover[0] - cover[1])).exp();
    let th = PI * (cover[0] + cover[1]);
    Vector2::new(r * th.cos(), r * th.sin())
}

/// Jacobian ∂(x, y)/∂(x1, x2) of [`anyon_chart`].
pub fn anyon_chart_jacobian(cover: &[f64; 2]) -> Matrix2<f64> {
    let r = (0.5 * (cover[0] - cover[1])).exp();
    let th = PI * (cover[0] + cover[1]);
    let (s, c) = th.sin_cos();
    Matrix2::new(
        0.5 * r * c - PI * r * s,
        -0.5 * r * c - PI * r * s,
        0.5 * r * s + PI * r * c,
        -0.5 * r * s + PI * r * c,
    )
}

impl PhasePoint {
    fn checked(space: PhaseSpaceId, coords: Vec<f64>, tol: f64) -> Result<Self> {
        space.validate()?;
        let p = PhasePoint { space, coords };
        p.validate(tol)?;
        Ok(p)
    }

    pub fn spin_sphere(s: f64, x: Vector3<f64>, tol: f64) -> Result<Self> {
        Self::checked(PhaseSpaceId::SpinSphere { s }, x.as_slice().to_vec(), tol)
    }

    pub fn free_rel(m: f64, x: Vector3<f64>, i: Vector4<f64>, tol: f64) -> Result<Self> {
        let mut c = vec![0.0; 7];
        put(&mut c, 0, x.as_slice());
        put(&mut c, 3, i.as_slice());
        Self::checked(PhaseSpaceId::FreeRel { m }, c, tol)
    }

    pub fn massive_spin(
        m: f64,
        s: f64,
        x: Vector3<f64>,
        i: Vector4<f64>,
        j: Vector4<f64>,
        tol: f64,
    ) -> Result<Self> {
        let mut c = vec![0.0; 11];
        put(&mut c, 0, x.as_slice());
        put(&mut c, 3, i.as_slice());
        put(&mut c, 7, j.as_slice());
        Self::checked(PhaseSpaceId::MassiveSpin { m, s }, c, tol)
    }

    pub fn massless(
        s: f64,
        chi: i8,
        x: Vector4<f64>,
        i: Vector4<f64>,
        j: Vector4<f64>,
        tol: f64,
    ) -> Result<Self> {
        let mut c = vec![0.0; 12];
        put(&mut c, 0, x.as_slice());
        put(&mut c, 4, i.as_slice());
        put(&mut c, 8, j.as_slice());
        Self::checked(PhaseSpaceId::Massless { s, chi }, c, tol)
    }

    pub fn three_d(m: f64, s: f64, x: Vector2<f64>, i: Vector3<f64>, tol: f64) -> Result<Self> {
        Self::checked(PhaseSpaceId::ThreeD { m, s }, vec![x.x, x.y, i.x, i.y, i.z], tol)
    }

    pub fn anyon(alpha: f64, cover: [f64; 2], momentum: Vector2<f64>, tol: f64) -> Result<Self> {
        Self::checked(PhaseSpaceId::Anyon { alpha }, vec![cover[0], cover[1], momentum.x, momentum.y], tol)
    }

    /// Spatial position (SpinSphere: the point itself).
    pub fn position(&self) -> Vector3<f64> {
        match self.space {
            PhaseSpaceId::Massless { .. } => v3(&self.coords, 1),
            PhaseSpaceId::ThreeD { .. } => Vector3::new(self.coords[0], self.coords[1], 0.0),
            PhaseSpaceId::Anyon { .. } => {
                let p = anyon_chart(&self.cover());
                Vector3::new(p.x, p.y, 0.0)
            }
            _ => v3(&self.coords, 0),
        }
    }

    /// The momentum direction I (4-vector; zero-padded for 2+1 and planar spaces).
    pub fn momentum(&self) -> Vector4<f64> {
        match self.space {
            PhaseSpaceId::FreeRel { .. } | PhaseSpaceId::MassiveSpin { .. } => v4(&self.coords, 3),
            PhaseSpaceId::Massless { .. } => v4(&self.coords, 4),
            PhaseSpaceId::ThreeD { .. } => Vector4::new(self.coords[2], self.coords[3], self.coords[4], 0.0),
            PhaseSpaceId::Anyon { .. } => Vector4::new(0.0, self.coords[2], self.coords[3], 0.0),
            PhaseSpaceId::SpinSphere { .. } => Vector4::zeros(),
        }
    }

    /// The spin vector J (zero where the space has none).
    pub fn spin_vector(&self) -> Vector4<f64> {
        match self.space {
            PhaseSpaceId::MassiveSpin { .. } => v4(&self.coords, 7),
            PhaseSpaceId::Massless { .. } => v4(&self.coords, 8),
            _ => Vector4::zeros(),
        }
    }

    pub fn sphere_point(&self) -> Vector3<f64> {
        v3(&self.coords, 0)
    }

    pub fn cover(&self) -> [f64; 2] {
        [self.coords[0], self.coords[1]]
    }

    /// Checks the per-space constraints.
    pub fn validate(&self, tol: f64) -> Result<()> {
        if self.coords.len() != self.space.ambient_dim() {
            return Err(Error::domain(format!(
                "{} point needs {} coordinates, got {}",
                self.space.name(),
                self.space.ambient_dim(),
                self.coords.len()
            )));
        }
        if self.coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("non-finite coordinate"));
        }
        let c = &self.coords;
        let fail = |what: &str, dev: f64| Err(Error::domain(format!("{what} violated by {dev:.3e}")));
        let scale = |v: &Vector4<f64>| 1.0 + v.norm_squared();
        match self.space {
            PhaseSpaceId::SpinSphere { .. } => {
                let dev = (v3(c, 0).norm_squared() - 1.0).abs();
                if dev > tol {
                    return fail("|x| = 1", dev);
                }
            }
            PhaseSpaceId::FreeRel { .. } | PhaseSpaceId::MassiveSpin { .. } => {
                let i = v4(c, 3);
                let dev = (mdot(&i, &i) - 1.0).abs() / scale(&i);
                if dev > tol || i[0] <= 0.0 {
                    return fail("I·I = 1, I⁰ > 0", dev);
                }
                if let PhaseSpaceId::MassiveSpin { .. } = self.space {
                    let j = v4(c, 7);
                    let s = scale(&i) * scale(&j);
                    let d1 = (mdot(&j, &j) + 1.0).abs() / s;
                    let d2 = mdot(&i, &j).abs() / s;
                    if d1 > tol {
                        return fail("J·J = −1", d1);
                    }
                    if d2 > tol {
                        return fail("I·J = 0", d2);
                    }
                }
            }
            PhaseSpaceId::Massless { .. } => {
                let i = v4(c, 4);
                let j = v4(c, 8);
                let s = scale(&i) * scale(&j);
                let checks = [
                    ("I·I = 0", mdot(&i, &i).abs() / scale(&i)),
                    ("J·J = 0", mdot(&j, &j).abs() / scale(&j)),
                    ("I·J = −1", (mdot(&i, &j) + 1.0).abs() / s),
                ];
                for (what, dev) in checks {
                    if dev > tol {
                        return fail(what, dev);
                    }
                }
                if i[0] <= 0.0 {
                    return fail("I⁰ > 0", -i[0]);
                }
            }
            PhaseSpaceId::ThreeD { .. } => {
                let (i0, i1, i2) = (c[2], c[3], c[4]);
                let dev = (i0 * i0 - i1 * i1 - i2 * i2 - 1.0).abs() / (1.0 + i0 * i0);
                if dev > tol || i0 <= 0.0 {
                    return fail("I·I = 1, I⁰ > 0", dev);
                }
            }
            PhaseSpaceId::Anyon { .. } => {}
        }
        Ok(())
    }

    /// Maps ambient coordinates near the constraint surface onto it.
    pub fn project(space: PhaseSpaceId, coords: &[f64]) -> Result<Self> {
        if coords.len() != space.ambient_dim() {
            return Err(Error::domain("wrong number of coordinates"));
        }
        let mut c = coords.to_vec();
        match space {
            PhaseSpaceId::SpinSphere { .. } => {
                let x = v3(&c, 0);
                let n = x.norm();
                if n < 1e-12 {
                    return Err(Error::domain("cannot project the origin onto S²"));
                }
                put(&mut c, 0, (x / n).as_slice());
            }
            PhaseSpaceId::FreeRel { .. } => {
                let i = on_hyperboloid4(&v3(&c, 4));
                put(&mut c, 3, i.as_slice());
            }
            PhaseSpaceId::MassiveSpin { .. } => {
                let i = on_hyperboloid4(&v3(&c, 4));
                let j = unit_spacelike_orthogonal(&i, &v4(&c, 7))?;
                put(&mut c, 3, i.as_slice());
                put(&mut c, 7, j.as_slice());
            }
            PhaseSpaceId::Massless { .. } => {
                let (i, j) = project_null_pair(&v4(&c, 4), &v4(&c, 8))?;
                put(&mut c, 4, i.as_slice());
                put(&mut c, 8, j.as_slice());
            }
            PhaseSpaceId::ThreeD { .. } => {
                c[2] = (1.0 + c[3] * c[3] + c[4] * c[4]).sqrt();
            }
            PhaseSpaceId::Anyon { .. } => {}
        }
        Ok(PhasePoint { space, coords: c })
    }

    /// Projects an arbitrary ambient vector onto the tangent space at `self`.
    pub fn tangent(&self, raw: &[f64]) -> Result<TangentVector> {
        if raw.len() != self.coords.len() {
            return Err(Error::domain("tangent has wrong number of components"));
        }
        let c = &self.coords;
        let mut d = raw.to_vec();
        match self.space {
            PhaseSpaceId::SpinSphere { .. } => {
                let x = v3(c, 0);
                let v = v3(&d, 0);
                put(&mut d, 0, (v - x * x.dot(&v)).as_slice());
            }
            PhaseSpaceId::FreeRel { .. } | PhaseSpaceId::MassiveSpin { .. } => {
                let i = v4(c, 3);
                let di_s = v3(&d, 4);
                d[3] = i.fixed_rows::<3>(1).dot(&di_s) / i[0];
                if let PhaseSpaceId::MassiveSpin { .. } = self.space {
                    let j = v4(c, 7);
                    let di = v4(&d, 3);
                    let dj_raw = v4(&d, 7);
                    let c2 = mdot(&j, &dj_raw);
                    let c1 = -mdot(&j, &di) - mdot(&i, &dj_raw);
                    put(&mut d, 7, (dj_raw + i * c1 + j * c2).as_slice());
                }
            }
            PhaseSpaceId::Massless { .. } => {
                let i = v4(c, 4);
                let j = v4(c, 8);
                let di_raw = v4(&d, 4);
                let di = di_raw + j * mdot(&i, &di_raw);
                let dj_raw = v4(&d, 8);
                let d1 = mdot(&j, &dj_raw);
                let d2 = mdot(&i, &dj_raw) + mdot(&j, &di);
                put(&mut d, 4, di.as_slice());
                put(&mut d, 8, (dj_raw + i * d1 + j * d2).as_slice());
            }
            PhaseSpaceId::ThreeD { .. } => {
                d[2] = (c[3] * d[3] + c[4] * d[4]) / c[2];
            }
            PhaseSpaceId::Anyon { .. } => {}
        }
        Ok(TangentVector { base: self.clone(), components: d })
    }

    /// Residuals of the linearized constraints for an ambient vector at `self`.
    pub fn tangency_defect(&self, d: &[f64]) -> f64 {
        let c = &self.coords;
        match self.space {
            PhaseSpaceId::SpinSphere { .. } => v3(c, 0).dot(&v3(d, 0)).abs(),
            PhaseSpaceId::FreeRel { .. } => mdot(&v4(c, 3), &v4(d, 3)).abs(),
            PhaseSpaceId::MassiveSpin { .. } => {
                let (i, j, di, dj) = (v4(c, 3), v4(c, 7), v4(d, 3), v4(d, 7));
                mdot(&i, &di).abs() + mdot(&j, &dj).abs() + (mdot(&i, &dj) + mdot(&j, &di)).abs()
            }
            PhaseSpaceId::Massless { .. } => {
                let (i, j, di, dj) = (v4(c, 4), v4(c, 8), v4(d, 4), v4(d, 8));
                mdot(&i, &di).abs() + mdot(&j, &dj).abs() + (mdot(&i, &dj) + mdot(&j, &di)).abs()
            }
            PhaseSpaceId::ThreeD { .. } => (c[2] * d[2] - c[3] * d[3] - c[4] * d[4]).abs(),
            PhaseSpaceId::Anyon { .. } => 0.0,
        }
    }

    /// Chart distance (Euclidean in ambient coordinates; planar position for anyons).
    pub fn chart_distance(&self, other: &PhasePoint) -> f64 {
        match self.space {
            PhaseSpaceId::Anyon { .. } => {
                let a = anyon_chart(&self.cover());
                let b = anyon_chart(&other.cover());
                let dp = Vector2::new(self.coords[2] - other.coords[2], self.coords[3] - other.coords[3]);
                ((a - b).norm_squared() + dp.norm_squared()).sqrt()
            }
            _ => self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt(),
        }
    }
}

impl TangentVector {
    /// Wraps components as a tangent at `base`, checking tangency.
    pub fn new(base: &PhasePoint, components: Vec<f64>, tol: f64) -> Result<Self> {
        if components.len() != base.coords.len() {
            return Err(Error::domain("tangent has wrong number of components"));
        }
        let scale = 1.0 + components.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = scale * (1.0 + base.coords.iter().map(|x| x * x).sum::<f64>());
        let dev = base.tangency_defect(&components) / scale;
        if dev > tol {
            return Err(Error::domain(format!("vector is not tangent (defect {dev:.3e})")));
        }
        Ok(Self { base: base.clone(), components })
    }

    pub fn zero(base: &PhasePoint) -> Self {
        Self { base: base.clone(), components: vec![0.0; base.coords.len()] }
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self { base: self.base.clone(), components: self.components.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &TangentVector) -> Self {
        Self {
            base: self.base.clone(),
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }
}

fn unit_spacelike_orthogonal(i: &Vector4<f64>, j: &Vector4<f64>) -> Result<Vector4<f64>> {
    let ii = mdot(i, i);
    let perp = j - i * (mdot(i, j) / ii);
    let n2 = -mdot(&perp, &perp);
    if n2 <= 1e-24 {
        return Err(Error::domain("J has no spacelike part orthogonal to I"));
    }
    Ok(perp / n2.sqrt())
}

/// Nearest null pair (I, J) with I·J = −1, via K∓ = (I ∓ J)/√2.
fn project_null_pair(i: &Vector4<f64>, j: &Vector4<f64>) -> Result<(Vector4<f64>, Vector4<f64>)> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let k_minus = (i - j) * r;
    let k_plus = (i + j) * r;
    let km = on_hyperboloid4(&k_minus.fixed_rows::<3>(1).into_owned());
    let kp = unit_spacelike_orthogonal(&km, &k_plus)?;
    Ok(((km + kp) * r, (kp - km) * r))
}
