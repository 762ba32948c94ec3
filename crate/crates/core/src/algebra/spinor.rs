use nalgebra::{Vector2, Vector3, Vector4};
use serde::{Deserialize, Serialize};

use super::{dirac_bar, gamma, gamma5, pauli, C64};
use crate::error::{Error, Result};

/// A two-component complex spinor ξ = (z1, z2), normalized to ξ̄ξ = 1 when
/// it represents a point of S³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spinor2 {
    pub z1: C64,
    pub z2: C64,
}

impl Spinor2 {
    /// Builds a spinor and checks the unit-norm invariant.
    pub fn new(z1: C64, z2: C64, tol: f64) -> Result<Self> {
        let s = Self { z1, z2 };
        s.validate(tol)?;
        Ok(s)
    }

    pub const fn from_components(z1: C64, z2: C64) -> Self {
        Self { z1, z2 }
    }

    /// Rescales to unit norm. Fails on the zero spinor.
    pub fn normalized(z1: C64, z2: C64) -> Result<Self> {
        let n = (z1.norm_sqr() + z2.norm_sqr()).sqrt();
        if n < 1e-300 || !n.is_finite() {
            return Err(Error::domain("cannot normalize a zero spinor"));
        }
        Ok(Self { z1: z1 / n, z2: z2 / n })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let dev = (self.norm_sqr() - 1.0).abs();
        if dev > tol || !dev.is_finite() {
            return Err(Error::domain(format!("spinor norm deviates from 1 by {dev:.3e}")));
        }
        Ok(())
    }

    /// Hermitian inner product ⟨self, other⟩ = self† other.
    pub fn inner(&self, other: &Spinor2) -> C64 {
        self.z1.conj() * other.z1 + self.z2.conj() * other.z2
    }

    pub fn scale(&self, c: C64) -> Spinor2 {
        Spinor2 { z1: self.z1 * c, z2: self.z2 * c }
    }

    /// Multiplication by e^{iφ}.
    pub fn phase(&self, phi: f64) -> Spinor2 {
        self.scale(C64::from_polar(1.0, phi))
    }

    pub fn as_vector(&self) -> Vector2<C64> {
        Vector2::new(self.z1, self.z2)
    }

    pub fn from_vector(v: &Vector2<C64>) -> Self {
        Self { z1: v[0], z2: v[1] }
    }

    /// Real coordinates (Re z1, Im z1, Re z2, Im z2).
    pub fn to_real(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn from_real(r: &[f64]) -> Self {
        Self { z1: C64::new(r[0], r[1]), z2: C64::new(r[2], r[3]) }
    }

    /// The Bloch vector ξ̄σ^iξ, without any normalization check.
    pub fn bloch(&self) -> Vector3<f64> {
        let v = self.as_vector();
        let comp = |k: usize| (v.adjoint() * pauli(k) * v)[(0, 0)].re;
        Vector3::new(comp(1), comp(2), comp(3))
    }

    /// A unit spinor whose Bloch vector is the given unit vector `x`.
    ///
    /// Uses the chart centred at the north pole when `x₃ ≥ 0` and the one
    /// centred at the south pole otherwise, so the result is well
    /// conditioned everywhere.
    pub fn from_bloch(x: &Vector3<f64>) -> Result<Self> {
        let n = x.norm();
        if (n - 1.0).abs() > 1e-6 {
            return Err(Error::domain(format!("Bloch vector has norm {n}")));
        }
        let x = x / n;
        if x.z >= 0.0 {
            Spinor2::normalized(C64::from(1.0 + x.z), C64::new(x.x, x.y))
        } else {
            Spinor2::normalized(C64::new(x.x, -x.y), C64::from(1.0 - x.z))
        }
    }
}

/// A Dirac spinor ψ = (a, b) with a, b two-spinors, acted on by the chiral
/// γ matrices of [`gamma`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiracSpinor {
    pub c: [C64; 4],
}

impl DiracSpinor {
    pub const fn from_components(c: [C64; 4]) -> Self {
        Self { c }
    }

    /// ψ = (upper, lower).
    pub fn from_blocks(upper: &Spinor2, lower: &Spinor2) -> Self {
        Self { c: [upper.z1, upper.z2, lower.z1, lower.z2] }
    }

    pub fn upper(&self) -> Spinor2 {
        Spinor2::from_components(self.c[0], self.c[1])
    }

    pub fn lower(&self) -> Spinor2 {
        Spinor2::from_components(self.c[2], self.c[3])
    }

    pub fn as_vector(&self) -> Vector4<C64> {
        Vector4::new(self.c[0], self.c[1], self.c[2], self.c[3])
    }

    pub fn from_vector(v: &Vector4<C64>) -> Self {
        Self { c: [v[0], v[1], v[2], v[3]] }
    }

    pub fn to_real(&self) -> [f64; 8] {
        let mut r = [0.0; 8];
        for (k, z) in self.c.iter().enumerate() {
            r[2 * k] = z.re;
            r[2 * k + 1] = z.im;
        }
        r
    }

    pub fn from_real(r: &[f64]) -> Self {
        let mut c = [C64::from(0.0); 4];
        for (k, z) in c.iter_mut().enumerate() {
            *z = C64::new(r[2 * k], r[2 * k + 1]);
        }
        Self { c }
    }

    pub fn scale(&self, z: C64) -> Self {
        Self { c: self.c.map(|x| x * z) }
    }

    pub fn phase(&self, phi: f64) -> Self {
        self.scale(C64::from_polar(1.0, phi))
    }

    /// ψ̄χ = ψ†γ⁰χ.
    pub fn bar_inner(&self, other: &DiracSpinor) -> C64 {
        (dirac_bar(&self.as_vector()) * other.as_vector())[(0, 0)]
    }

    /// ψ̄ψ (real for any ψ).
    pub fn scalar(&self) -> f64 {
        self.bar_inner(self).re
    }

    /// ψ̄γ₅ψ (purely imaginary for any ψ).
    pub fn pseudoscalar(&self) -> C64 {
        let v = self.as_vector();
        (dirac_bar(&v) * gamma5() * v)[(0, 0)]
    }

    /// I^μ = ψ̄γ^μψ.
    pub fn vector_current(&self) -> Vector4<f64> {
        let v = self.as_vector();
        let bar = dirac_bar(&v);
        Vector4::from_fn(|mu, _| (bar * gamma(mu) * v)[(0, 0)].re)
    }

    /// J^μ = ψ̄γ^μγ₅ψ.
    pub fn axial_current(&self) -> Vector4<f64> {
        let v = self.as_vector();
        let bar = dirac_bar(&v);
        let g5 = gamma5();
        Vector4::from_fn(|mu, _| (bar * gamma(mu) * g5 * v)[(0, 0)].re)
    }

    /// Checks ψ̄ψ = 1 and ψ̄γ₅ψ = 0.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let s = self.scalar();
        let p = self.pseudoscalar().norm();
        if (s - 1.0).abs() > tol || !s.is_finite() {
            return Err(Error::domain(format!("Dirac spinor has ψ̄ψ = {s}")));
        }
        if p > tol {
            return Err(Error::domain(format!("Dirac spinor has |ψ̄γ₅ψ| = {p:.3e}")));
        }
        Ok(())
    }

    /// Projects onto the constraint surface ψ̄ψ = 1, ψ̄γ₅ψ = 0.
    ///
    /// With ψ = (a, b) both constraints read a†b = 1/2; the projection
    /// rotates the relative phase of b and rescales both blocks equally.
    pub fn project(&self) -> Result<Self> {
        let a = self.upper();
        let b = self.lower();
        let ab = a.inner(&b);
        if ab.norm() < 1e-12 {
            return Err(Error::domain("Dirac spinor too far from the constraint surface"));
        }
        // a†(b e^{-iθ}) real positive, then scale both by 1/sqrt(2|a†b|).
        let fix = C64::from_polar(1.0, -ab.arg());
        let scale = (2.0 * ab.norm()).sqrt().recip();
        Ok(DiracSpinor::from_blocks(&a.scale(C64::from(scale)), &b.scale(fix * scale)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bloch_roundtrip_both_charts() {
        for x in [
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(0.0, 0.0, -1.0),
            Vector3::new(0.6, 0.0, 0.8),
            Vector3::new(0.36, -0.48, -0.8),
        ] {
            let s = Spinor2::from_bloch(&x).unwrap();
            assert!((s.bloch() - x).norm() < 1e-14, "{x:?}");
        }
    }

    #[test]
    fn zero_spinor_rejected() {
        assert!(Spinor2::normalized(C64::from(0.0), C64::from(0.0)).is_err());
        assert!(Spinor2::new(C64::from(2.0), C64::from(0.0), 1e-9).is_err());
    }

    #[test]
    fn projection_lands_on_constraints() {
        let psi = DiracSpinor::from_components([
            C64::new(0.3, 0.1),
            C64::new(-0.2, 0.5),
            C64::new(0.4, -0.3),
            C64::new(0.1, 0.2),
        ]);
        let p = psi.project().unwrap();
        p.validate(1e-12).unwrap();
    }
}
