use nalgebra::Vector3;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::phasespaces::PhaseSpaceId;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FluxReport {
    pub total: f64,
    pub depth: u32,
    /// Richardson estimate |F_d − F_{d−1}| / 3 of the discretization error.
    pub error: f64,
    /// F_d + (F_d − F_{d−1}) / 3.
    pub extrapolated: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integrality {
    pub quantizable: bool,
    /// 2s, when the flux is an integer multiple of 2π.
    pub n: Option<i64>,
    pub flux_over_2pi: f64,
}

type Tri = [Vector3<f64>; 3];

/// Midpoint value of Ω = s x·(u × v) on a flat triangle.
fn triangle_flux(s: f64, t: &Tri) -> f64 {
    let c = (t[0] + t[1] + t[2]).normalize();
    0.5 * s * c.dot(&(t[1] - t[0]).cross(&(t[2] - t[0])))
}

fn icosahedron() -> Vec<Tri> {
    let phi = 0.5 * (1.0 + 5f64.sqrt());
    let v: Vec<Vector3<f64>> = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ]
    .iter()
    .map(|&(x, y, z)| Vector3::new(x, y, z).normalize())
    .collect();
    const FACES: [[usize; 3]; 20] = [
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    FACES
        .iter()
        .map(|f| {
            let t = [v[f[0]], v[f[1]], v[f[2]]];
            // Orient outward.
            if (t[1] - t[0]).cross(&(t[2] - t[0])).dot(&(t[0] + t[1] + t[2])) < 0.0 {
                [t[0], t[2], t[1]]
            } else {
                t
            }
        })
        .collect()
}

fn subdivide(tris: &[Tri]) -> Vec<Tri> {
    let mut out = Vec::with_capacity(4 * tris.len());
    for [a, b, c] in tris {
        let ab = (a + b).normalize();
        let bc = (b + c).normalize();
        let ca = (c + a).normalize();
        out.push([*a, ab, ca]);
        out.push([ab, *b, bc]);
        out.push([ca, bc, *c]);
        out.push([ab, bc, ca]);
    }
    out
}

/// ∫Ω over an icosphere refined `depth` times. Only the spin sphere is compact.
pub fn surface_flux(space: PhaseSpaceId, depth: u32) -> Result<FluxReport> {
    let PhaseSpaceId::SpinSphere { s } = space else {
        return Err(Error::Unsupported(format!("flux over the non-compact space {}", space.name())));
    };
    space.validate()?;
    let mut mesh = icosahedron();
    let mut levels = vec![mesh.iter().map(|t| triangle_flux(s, t)).sum::<f64>()];
    for _ in 0..depth.max(1) {
        mesh = subdivide(&mesh);
        levels.push(mesh.iter().map(|t| triangle_flux(s, t)).sum());
    }
    let d = depth as usize;
    let (fd, other) = if d == 0 { (levels[0], levels[1]) } else { (levels[d], levels[d - 1]) };
    Ok(FluxReport { total: fd, depth, error: (fd - other).abs() / 3.0, extrapolated: fd + (fd - other) / 3.0 })
}

/// Polar mesh of the cap of angular radius `radius` about `axis`.
fn cap_mesh_flux(s: f64, axis: &Vector3<f64>, radius: f64, rings: usize, sectors: usize) -> f64 {
    let helper = if axis.x.abs() < 0.9 { Vector3::x() } else { Vector3::y() };
    let e1 = (helper - axis * axis.dot(&helper)).normalize();
    let e2 = axis.cross(&e1);
    let at = |i: usize, j: usize| {
        let th = radius * i as f64 / rings as f64;
        let ph = TAU * (j % sectors) as f64 / sectors as f64;
        axis * th.cos() + (e1 * ph.cos() + e2 * ph.sin()) * th.sin()
    };
    let mut total = 0.0;
    for j in 0..sectors {
        total += triangle_flux(s, &[*axis, at(1, j), at(1, j + 1)]);
        for i in 1..rings {
            total += triangle_flux(s, &[at(i, j), at(i + 1, j), at(i + 1, j + 1)]);
            total += triangle_flux(s, &[at(i, j), at(i + 1, j + 1), at(i, j + 1)]);
        }
    }
    total
}

/// ∫Ω over the spherical cap {x : angle(x, axis) ≤ radius}, oriented by the
/// outward normal. The reported total is Richardson-extrapolated from two
/// polar meshes (4·2^d rings × 16·2^d sectors and half that).
pub fn cap_flux(s: f64, axis: &Vector3<f64>, radius: f64, depth: u32) -> Result<FluxReport> {
    let a = axis.try_normalize(1e-12).ok_or_else(|| Error::domain("zero axis"))?;
    if !(0.0..=std::f64::consts::PI).contains(&radius) {
        return Err(Error::domain(format!("cap radius {radius} outside [0, π]")));
    }
    let scale = 1usize << depth.min(12);
    let fine = cap_mesh_flux(s, &a, radius, 4 * scale, 16 * scale);
    let coarse = cap_mesh_flux(s, &a, radius, 2 * scale, 8 * scale);
    let extrapolated = fine + (fine - coarse) / 3.0;
    Ok(FluxReport { total: extrapolated, depth, error: (fine - coarse).abs() / 3.0, extrapolated })
}

/// Whether the spin sphere with spin s is prequantizable: ∫Ω / 2π within
/// `tol` of an integer. Uses the extrapolated flux at the given depth.
pub fn integrality_check(s: f64, depth: u32, tol: f64) -> Result<Integrality> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("spin must be non-negative, got {s}")));
    }
    let flux = surface_flux(PhaseSpaceId::SpinSphere { s }, depth)?;
    let ratio = flux.extrapolated / TAU;
    let nearest = ratio.round();
    let quantizable = (ratio - nearest).abs() <= tol;
    Ok(Integrality { quantizable, n: quantizable.then_some(nearest as i64), flux_over_2pi: ratio })
}
