use nalgebra::{Matrix2, Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::{pauli, Spinor2, C64};
use crate::error::{Error, Result};

/// An element of SU(2), stored as a unit quaternion (w, v) realizing the
/// matrix w·1 − i v·σ.
///
/// Products are formed on the quaternion components, which keeps long
/// compositions on the group without re-projecting a 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SU2Element {
    pub w: f64,
    pub v: [f64; 3],
}

impl SU2Element {
    pub const IDENTITY: SU2Element = SU2Element { w: 1.0, v: [0.0; 3] };
    pub const MINUS_ONE: SU2Element = SU2Element { w: -1.0, v: [0.0; 3] };

    pub fn from_quaternion(w: f64, v: [f64; 3], tol: f64) -> Result<Self> {
        let q = Self { w, v };
        q.validate(tol)?;
        Ok(q)
    }

    /// Reads a 2×2 matrix, checking unitarity and unit determinant.
    pub fn from_matrix(m: &Matrix2<C64>, tol: f64) -> Result<Self> {
        let unit = (m.adjoint() * m - Matrix2::identity()).norm();
        let det = (m.determinant() - C64::from(1.0)).norm();
        if unit > tol || det > tol {
            return Err(Error::domain(format!(
                "matrix is not in SU(2): |α†α − 1| = {unit:.3e}, |det α − 1| = {det:.3e}"
            )));
        }
        // m = [[w − iz, −ix − y], [−ix + y, w + iz]]
        let w = 0.5 * (m[(0, 0)] + m[(1, 1)]).re;
        let z = 0.5 * (m[(1, 1)] - m[(0, 0)]).im;
        let x = -0.5 * (m[(0, 1)] + m[(1, 0)]).im;
        let y = 0.5 * (m[(1, 0)] - m[(0, 1)]).re;
        Ok(Self { w, v: [x, y, z] })
    }

    /// The spin-1/2 lift of a rotation by `angle` about `axis` (right-hand rule).
    pub fn rotation(axis: &Vector3<f64>, angle: f64) -> Result<Self> {
        let n = axis.norm();
        if (n - 1.0).abs() > 1e-9 {
            return Err(Error::domain(format!("rotation axis has norm {n}")));
        }
        let (s, c) = (0.5 * angle).sin_cos();
        Ok(Self { w: c, v: [s * axis.x, s * axis.y, s * axis.z] })
    }

    pub fn matrix(&self) -> Matrix2<C64> {
        let [x, y, z] = self.v;
        Matrix2::new(
            C64::new(self.w, -z),
            C64::new(-y, -x),
            C64::new(y, -x),
            C64::new(self.w, z),
        )
    }

    pub fn norm_deviation(&self) -> f64 {
        let [x, y, z] = self.v;
        (self.w * self.w + x * x + y * y + z * z - 1.0).abs()
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let dev = self.norm_deviation();
        if dev > tol || !dev.is_finite() {
            return Err(Error::domain(format!("SU(2) element off the group by {dev:.3e}")));
        }
        Ok(())
    }

    pub fn compose(&self, rhs: &SU2Element) -> SU2Element {
        let (w1, w2) = (self.w, rhs.w);
        let a = Vector3::from(self.v);
        let b = Vector3::from(rhs.v);
        let v = w1 * b + w2 * a + a.cross(&b);
        SU2Element { w: w1 * w2 - a.dot(&b), v: [v.x, v.y, v.z] }
    }

    pub fn inverse(&self) -> SU2Element {
        SU2Element { w: self.w, v: [-self.v[0], -self.v[1], -self.v[2]] }
    }

    pub fn neg(&self) -> SU2Element {
        SU2Element { w: -self.w, v: [-self.v[0], -self.v[1], -self.v[2]] }
    }

    pub fn act(&self, xi: &Spinor2) -> Spinor2 {
        Spinor2::from_vector(&(self.matrix() * xi.as_vector()))
    }

    /// Largest componentwise distance between the quaternions.
    pub fn distance(&self, other: &SU2Element) -> f64 {
        let mut d = (self.w - other.w).abs();
        for k in 0..3 {
            d = d.max((self.v[k] - other.v[k]).abs());
        }
        d
    }
}

impl std::ops::Mul for SU2Element {
    type Output = SU2Element;
    fn mul(self, rhs: SU2Element) -> SU2Element {
        self.compose(&rhs)
    }
}

/// The group element cos(s|X|)·1 − (i/|X|) sin(s|X|) σ·X with X = angle·axis.
///
/// With `s = 1/2` this is the ordinary spin-1/2 lift of a rotation by
/// `angle`; for `s = n/2` a rotation of |X| = 2π yields (−1)^n.
pub fn su2_exp(axis: &Vector3<f64>, angle: f64, s: f64) -> Result<SU2Element> {
    let n = axis.norm();
    if (n - 1.0).abs() > 1e-9 || !n.is_finite() {
        return Err(Error::domain(format!("axis must be a unit vector, |axis| = {n}")));
    }
    if angle < 0.0 || !angle.is_finite() {
        return Err(Error::domain(format!("angle must be non-negative, got {angle}")));
    }
    let twice = 2.0 * s;
    if s < 0.0 || (twice - twice.round()).abs() > 1e-12 {
        return Err(Error::domain(format!("s = {s} is not a non-negative half-integer")));
    }
    // The axis is unit, so σ·X/|X| = σ·axis and the angle → 0 limit needs
    // no division.
    let (sin, cos) = (s * angle).sin_cos();
    Ok(SU2Element { w: cos, v: [sin * axis.x, sin * axis.y, sin * axis.z] })
}

/// A proper rotation of R³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SO3Element {
    pub m: Matrix3<f64>,
}

impl SO3Element {
    pub fn identity() -> Self {
        Self { m: Matrix3::identity() }
    }

    pub fn new(m: Matrix3<f64>, tol: f64) -> Result<Self> {
        let r = Self { m };
        r.validate(tol)?;
        Ok(r)
    }

    /// Rodrigues' formula for a rotation by `angle` about the unit `axis`.
    pub fn axis_angle(axis: &Vector3<f64>, angle: f64) -> Self {
        let k = axis.normalize();
        let kx = Matrix3::new(0.0, -k.z, k.y, k.z, 0.0, -k.x, -k.y, k.x, 0.0);
        let m = Matrix3::identity() + kx * angle.sin() + kx * kx * (1.0 - angle.cos());
        Self { m }
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let orth = (self.m.transpose() * self.m - Matrix3::identity()).norm();
        let det = (self.m.determinant() - 1.0).abs();
        if orth > tol || det > tol {
            return Err(Error::domain(format!(
                "not a proper rotation: |OᵀO − 1| = {orth:.3e}, |det − 1| = {det:.3e}"
            )));
        }
        Ok(())
    }

    pub fn apply(&self, x: &Vector3<f64>) -> Vector3<f64> {
        self.m * x
    }

    pub fn compose(&self, rhs: &SO3Element) -> SO3Element {
        SO3Element { m: self.m * rhs.m }
    }
}

/// O^{ij}(α) = ½ Tr(α† σ^i α σ^j); two-to-one, with O(α) = O(−α).
///
/// Compatible with the Hopf projection: π(αξ) = O(α)·π(ξ).
pub fn su2_to_so3(alpha: &SU2Element, tol: f64) -> Result<SO3Element> {
    alpha.validate(tol)?;
    let a = alpha.matrix();
    let ad = a.adjoint();
    let m = Matrix3::from_fn(|i, j| 0.5 * (ad * pauli(i + 1) * a * pauli(j + 1)).trace().re);
    Ok(SO3Element { m })
}
