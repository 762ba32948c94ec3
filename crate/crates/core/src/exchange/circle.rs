use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phasespaces::{PhasePoint, PhaseSpaceId};

/// An orbit circle of a rotation subgroup through two points: γ runs from
/// the first point to the second, γ′ from the second back to the first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub axis: Vector3<f64>,
    pub gamma: f64,
    pub gamma_prime: f64,
}

fn sphere_pair(x1: &PhasePoint, x2: &PhasePoint) -> Result<(Vector3<f64>, Vector3<f64>)> {
    for p in [x1, x2] {
        if !matches!(p.space, PhaseSpaceId::SpinSphere { .. }) {
            return Err(Error::domain("common circles are defined on the spin sphere"));
        }
    }
    if x1.space != x2.space {
        return Err(Error::domain("points lie on different spheres"));
    }
    Ok((x1.sphere_point().normalize(), x2.sphere_point().normalize()))
}

/// The circle through x1 and x2 about the axis x1 + x2; rotating by π about
/// it swaps the points, so γ = γ′ = π.
pub fn common_circle(x1: &PhasePoint, x2: &PhasePoint, tol: f64) -> Result<Circle> {
    let (a, b) = sphere_pair(x1, x2)?;
    circle_through(&a, &b, None, tol)
}

/// The orbit circle of rotations about `axis` through x1 and x2, which must
/// have the same latitude with respect to it.
pub fn common_circle_about(x1: &PhasePoint, x2: &PhasePoint, axis: &Vector3<f64>, tol: f64) -> Result<Circle> {
    let (a, b) = sphere_pair(x1, x2)?;
    circle_through(&a, &b, Some(axis), tol)
}

/// Circle through two unit vectors, optionally about a given axis.
pub(crate) fn circle_through(a: &Vector3<f64>, b: &Vector3<f64>, axis: Option<&Vector3<f64>>, tol: f64) -> Result<Circle> {
    if (a - b).norm() <= tol {
        return Err(Error::Degenerate("the two points coincide".into()));
    }
    let Some(axis) = axis else {
        let s = a + b;
        if s.norm() <= tol {
            return Err(Error::AmbiguousAxis("antipodal points lie on infinitely many common circles".into()));
        }
        return Ok(Circle { axis: s.normalize(), gamma: PI, gamma_prime: PI });
    };
    let an = axis.norm();
    if an <= tol || !an.is_finite() {
        return Err(Error::domain("tie-break axis must be nonzero"));
    }
    let n = axis / an;
    let (ha, hb) = (a.dot(&n), b.dot(&n));
    if (ha - hb).abs() > tol.max(1e-12) * 10.0 {
        return Err(Error::domain(format!(
            "points are not on one orbit circle of the axis (heights {ha:.6} and {hb:.6})"
        )));
    }
    let (pa, pb) = (a - n * ha, b - n * hb);
    if pa.norm() <= tol {
        return Err(Error::Degenerate("points lie on the rotation axis".into()));
    }
    let gamma = n.dot(&pa.cross(&pb)).atan2(pa.dot(&pb)).rem_euclid(TAU);
    Ok(Circle { axis: n, gamma, gamma_prime: TAU - gamma })
}
