use nalgebra::{Matrix2, Matrix4, Vector3, Vector4};
use serde::{Deserialize, Serialize};

use super::{sigma, sigma_dot, DiracSpinor, SU2Element, C64, ETA};
use crate::error::{Error, Result};

/// An element of SL(2,C).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SL2CElement {
    pub m: Matrix2<C64>,
}

impl SL2CElement {
    pub fn identity() -> Self {
        Self { m: Matrix2::identity() }
    }

    pub fn new(m: Matrix2<C64>, tol: f64) -> Result<Self> {
        let a = Self { m };
        a.validate(tol)?;
        Ok(a)
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let dev = (self.m.determinant() - C64::from(1.0)).norm();
        if dev > tol || !dev.is_finite() {
            return Err(Error::domain(format!("|det α − 1| = {dev:.3e}")));
        }
        Ok(())
    }

    pub fn from_su2(q: &SU2Element) -> Self {
        Self { m: q.matrix() }
    }

    /// exp(σ·n η/2): a pure boost of rapidity η along the unit vector n.
    pub fn boost(direction: &Vector3<f64>, rapidity: f64) -> Result<Self> {
        let n = direction.norm();
        if (n - 1.0).abs() > 1e-9 {
            return Err(Error::domain(format!("boost direction has norm {n}")));
        }
        let (c, s) = ((0.5 * rapidity).cosh(), (0.5 * rapidity).sinh());
        Ok(Self { m: Matrix2::identity() * C64::from(c) + sigma_dot(direction) * C64::from(s) })
    }

    /// The boost taking the rest vector (1, 0, 0, 0) to the unit timelike `i`.
    pub fn boost_to(i: &Vector4<f64>) -> Result<Self> {
        let p = Vector3::new(i[1], i[2], i[3]);
        let pn = p.norm();
        if pn < 1e-15 {
            return Ok(Self::identity());
        }
        let rapidity = pn.asinh();
        Self::boost(&(p / pn), rapidity)
    }

    pub fn compose(&self, rhs: &SL2CElement) -> SL2CElement {
        SL2CElement { m: self.m * rhs.m }
    }

    pub fn inverse(&self) -> SL2CElement {
        // det = 1, so the inverse is the adjugate.
        let m = &self.m;
        SL2CElement { m: Matrix2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]) }
    }

    pub fn neg(&self) -> SL2CElement {
        SL2CElement { m: -self.m }
    }

    /// U(α) = diag(α, (α†)⁻¹), the action on Dirac spinors.
    ///
    /// The lower block reduces to α for unitary α; for boosts the inverse
    /// adjoint is what keeps ψ̄ψ invariant and makes U a homomorphism.
    pub fn dirac_matrix(&self) -> Matrix4<C64> {
        let lower = self.inverse().m.adjoint();
        let mut u = Matrix4::zeros();
        u.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.m);
        u.fixed_view_mut::<2, 2>(2, 2).copy_from(&lower);
        u
    }

    pub fn act_dirac(&self, psi: &DiracSpinor) -> DiracSpinor {
        DiracSpinor::from_vector(&(self.dirac_matrix() * psi.as_vector()))
    }
}

impl std::ops::Mul for SL2CElement {
    type Output = SL2CElement;
    fn mul(self, rhs: SL2CElement) -> SL2CElement {
        self.compose(&rhs)
    }
}

/// A proper orthochronous Lorentz transformation, stored as the mixed
/// tensor Λ^μ_ν acting on contravariant vectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzElement {
    pub m: Matrix4<f64>,
}

impl LorentzElement {
    pub fn identity() -> Self {
        Self { m: Matrix4::identity() }
    }

    pub fn new(m: Matrix4<f64>, tol: f64) -> Result<Self> {
        let l = Self { m };
        l.validate(tol)?;
        Ok(l)
    }

    pub fn eta() -> Matrix4<f64> {
        Matrix4::from_diagonal(&Vector4::from(ETA))
    }

    /// Checks ΛᵀηΛ = η and det Λ = 1.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let eta = Self::eta();
        let dev = (self.m.transpose() * eta * self.m - eta).norm() / (1.0 + self.m.norm().powi(2));
        let det = (self.m.determinant() - 1.0).abs();
        if dev > tol || det > tol.max(1e-12 * self.m.norm().powi(4)) {
            return Err(Error::domain(format!(
                "not a proper Lorentz transformation: metric defect {dev:.3e}, |det − 1| = {det:.3e}"
            )));
        }
        Ok(())
    }

    pub fn apply(&self, x: &Vector4<f64>) -> Vector4<f64> {
        self.m * x
    }

    pub fn compose(&self, rhs: &LorentzElement) -> LorentzElement {
        LorentzElement { m: self.m * rhs.m }
    }

    /// Λ^{μν} = Λ^μ_ρ η^{ρν}, both indices up.
    pub fn contravariant(&self) -> Matrix4<f64> {
        self.m * Self::eta()
    }
}

/// Λ^μ_ν(α) = ½ Tr(σ_μ α σ_ν α†) with σ_μ = (1, σ^i).
///
/// Defined by α (x^ν σ_ν) α† = (Λx)^μ σ_μ, so Λ(1) = 1, Λ(αβ) = Λ(α)Λ(β)
/// and Λ(−α) = Λ(α). Under ψ → U(α)ψ the currents ψ̄γ^μψ and ψ̄γ^μγ₅ψ
/// transform with this Λ.
pub fn sl2c_to_lorentz(alpha: &SL2CElement, tol: f64) -> Result<LorentzElement> {
    alpha.validate(tol)?;
    let a = alpha.m;
    let ad = a.adjoint();
    let m = Matrix4::from_fn(|mu, nu| 0.5 * (sigma(mu) * a * sigma(nu) * ad).trace().re);
    Ok(LorentzElement { m })
}
