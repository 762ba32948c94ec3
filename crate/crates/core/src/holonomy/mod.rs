//! Line holonomy, horizontal lifts and flux integrals.
//!
//! Orientation: S² carries the outward normal, so a loop running
//! counterclockwise about an axis (seen from outside) bounds the cap around
//! that axis with positive flux, and ∫_{S²} Ω = 4πs.

mod flux;
mod lift;
mod path;

pub use flux::{cap_flux, integrality_check, surface_flux, FluxReport, Integrality};
pub use lift::{dirac_spinor_over, horizontal_lift, lift_point, line_holonomy, loop_holonomy, Holonomy};
pub use path::{circle_path, SampledPath};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Spinor2;
    use crate::phasespaces::PhaseSpaceId;
    use crate::prequant::{BundleId, BundlePoint};
    use crate::sampling;
    use nalgebra::Vector3;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn sphere_flux_converges() {
        for s in [0.5, 1.0, 1.5, 2.0] {
            let r = surface_flux(PhaseSpaceId::SpinSphere { s }, 5).unwrap();
            let exact = 4.0 * PI * s;
            println!("s={s} rel={:e} err_est={:e}", (r.total - exact).abs() / exact, r.error);
            assert!((r.total - exact).abs() < 1e-3 * exact);
        }
        let r = integrality_check(2.0, 5, 1e-3).unwrap();
        println!("{r:?}");
    }

    #[test]
    fn equator_holonomy() {
        for (n, expect) in [(1u32, -1.0), (2, 1.0), (3, -1.0)] {
            let s = f64::from(n) / 2.0;
            let path = circle_path(s, &Vector3::z(), PI / 2.0, 512).unwrap();
            let xi = Spinor2::from_bloch(&path.points[0].sphere_point()).unwrap();
            let b = BundleId::Hopf { n };
            let h = loop_holonomy(&b, &path, &BundlePoint::hopf(n, xi, 1e-9).unwrap()).unwrap();
            println!("n={n} integral={} err={:e}", h.integral, h.error);
            assert!((h.phase().re - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn stokes_on_random_caps() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let b = BundleId::Hopf { n: 1 };
        let mut worst = 0.0f64;
        for _ in 0..20 {
            let axis = sampling::unit_vector3(&mut rng);
            let radius = rng.random_range(0.1..3.0);
            let path = circle_path(0.5, &axis, radius, 512).unwrap();
            let xi = BundlePoint::hopf(1, Spinor2::from_bloch(&path.points[0].sphere_point()).unwrap(), 1e-9).unwrap();
            let h = loop_holonomy(&b, &path, &xi).unwrap();
            let f = cap_flux(0.5, &axis, radius, 4).unwrap();
            let d = (h.phase() - crate::algebra::C64::from_polar(1.0, f.total)).norm();
            worst = worst.max(d);
        }
        println!("worst {worst:e}");
        assert!(worst < 1e-4);
    }
}
