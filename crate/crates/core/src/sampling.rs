//! Random samples of group elements, spinors, phase-space points and
//! tangent vectors, for property checks and the verification runner.

use nalgebra::{Vector2, Vector3, Vector4};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::algebra::{DiracSpinor, SL2CElement, Spinor2, SU2Element, C64};
use crate::error::Result;
use crate::phasespaces::{PhasePoint, PhaseSpaceId, TangentVector};

pub fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

pub fn normal_vec<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| normal(rng)).collect()
}

pub fn unit_vector3<R: Rng + ?Sized>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(normal(rng), normal(rng), normal(rng));
        let n = v.norm();
        if n > 1e-6 {
            return v / n;
        }
    }
}

/// Haar-distributed SU(2) element.
pub fn su2<R: Rng + ?Sized>(rng: &mut R) -> SU2Element {
    loop {
        let q = [normal(rng), normal(rng), normal(rng), normal(rng)];
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            return SU2Element::from_quaternion(q[0] / n, [q[1] / n, q[2] / n, q[3] / n], 1e-9)
                .expect("normalized quaternion");
        }
    }
}

/// Random rotation times a boost of rapidity up to `max_rapidity`.
pub fn sl2c<R: Rng + ?Sized>(rng: &mut R, max_rapidity: f64) -> SL2CElement {
    let rot = SL2CElement::from_su2(&su2(rng));
    let eta = rng.random_range(0.0..=max_rapidity);
    let boost = SL2CElement::boost(&unit_vector3(rng), eta).expect("unit direction");
    boost * rot
}

pub fn spinor<R: Rng + ?Sized>(rng: &mut R) -> Spinor2 {
    let z1 = C64::new(normal(rng), normal(rng));
    let z2 = C64::new(normal(rng), normal(rng));
    Spinor2::normalized(z1, z2).unwrap_or(Spinor2::from_components(C64::new(1.0, 0.0), C64::new(0.0, 0.0)))
}

/// Random spinor on the constraint surface ψ̄ψ = 1, ψ̄γ₅ψ = 0.
pub fn dirac_spinor<R: Rng + ?Sized>(rng: &mut R) -> DiracSpinor {
    let xi = spinor(rng);
    let rest = DiracSpinor::from_blocks(&xi.scale(C64::from(std::f64::consts::FRAC_1_SQRT_2)), &xi.scale(C64::from(std::f64::consts::FRAC_1_SQRT_2)));
    let g = sl2c(rng, 1.5);
    let phase = rng.random_range(0.0..std::f64::consts::TAU);
    g.act_dirac(&rest).phase(phase)
}

/// Random point of the given space, moderate in size.
pub fn point<R: Rng + ?Sized>(rng: &mut R, space: PhaseSpaceId) -> Result<PhasePoint> {
    match space {
        PhaseSpaceId::SpinSphere { s } => PhasePoint::spin_sphere(s, unit_vector3(rng), 1e-9),
        PhaseSpaceId::Anyon { alpha } => {
            let cover = [rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5)];
            PhasePoint::anyon(alpha, cover, Vector2::new(normal(rng), normal(rng)), 1e-9)
        }
        _ => {
            let raw: Vec<f64> = normal_vec(rng, space.ambient_dim()).iter().map(|x| 0.7 * x).collect();
            PhasePoint::project(space, &raw)
        }
    }
}

pub fn tangent<R: Rng + ?Sized>(rng: &mut R, p: &PhasePoint) -> Result<TangentVector> {
    let raw = normal_vec(rng, p.coords.len());
    p.tangent(&raw)
}

/// Random 4-vector orthogonal to I in the Minkowski product.
pub fn orthogonal_to<R: Rng + ?Sized>(rng: &mut R, i: &Vector4<f64>) -> Vector4<f64> {
    let raw = Vector4::new(normal(rng), normal(rng), normal(rng), normal(rng));
    let d = crate::algebra::mdot(&raw, i);
    let r = Vector4::new(1.0, 0.0, 0.0, 0.0);
    // raw − (raw·I / r·I) r; r·I = I⁰ > 0 for a future-pointing I
    raw - r * (d / crate::algebra::mdot(&r, i))
}
