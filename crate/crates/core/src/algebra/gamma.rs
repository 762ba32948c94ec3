use nalgebra::{Matrix4, RowVector4, Vector4};

use super::{sigma, sigma_tilde, C64, I};

pub type Gamma = Matrix4<C64>;

/// γ^μ in the chiral block form [[0, σ̃^μ], [σ^μ, 0]].
pub fn gamma(mu: usize) -> Gamma {
    let mut g = Matrix4::zeros();
    let upper = sigma_tilde(mu);
    let lower = sigma(mu);
    g.fixed_view_mut::<2, 2>(0, 2).copy_from(&upper);
    g.fixed_view_mut::<2, 2>(2, 0).copy_from(&lower);
    g
}

/// γ₅ = iγ⁰γ¹γ²γ³; equals diag(1, 1, −1, −1) in this basis.
pub fn gamma5() -> Gamma {
    gamma(0) * gamma(1) * gamma(2) * gamma(3) * I
}

/// ψ̄ = ψ†γ⁰.
pub fn dirac_bar(psi: &Vector4<C64>) -> RowVector4<C64> {
    psi.adjoint() * gamma(0)
}
