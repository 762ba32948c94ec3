use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix2, Matrix4, Vector2, Vector3, Vector4};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::circle::{circle_through, Circle};
use crate::algebra::{sl2c_to_lorentz, LorentzElement, SL2CElement, SO3Element, SU2Element};
use crate::error::{Error, Result};
use crate::holonomy::SampledPath;
use crate::phasespaces::{anyon_chart, planar_rotation, PhasePoint, PhaseSpaceId, SymmetryAction};
use crate::prequant::GroupElement;
use crate::sampling;

/// Exchange type: TypeI sends the second particle back along γ, TypeII
/// sends it on along γ′.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    TypeI,
    TypeII,
}

/// A Lie-algebra direction; the two legs use multiples θ1 Z and θ2 Z of it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    /// Rotation of the sphere about `axis`.
    SphereRotation { axis: Vector3<f64> },
    /// Rotation about `axis` in the rest frame `frame` of the common
    /// momentum, combined with the straight translation of x between the
    /// two starting positions.
    RestFrameRotation { frame: SL2CElement, axis: Vector3<f64> },
    /// Spatial rotation about the line through `center` along `axis`.
    SpatialRotation { axis: Vector3<f64>, center: Vector3<f64> },
    /// Planar rotation about `center`.
    PlanarRotation { center: Vector2<f64> },
    /// Rotation of the punctured plane about the origin.
    AnyonRotation,
}

/// Leg parameters and extra turns for an exchange.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExchangeOptions {
    /// Tie-break rotation axis (sphere and rest-frame spins only).
    pub axis: Option<Vector3<f64>>,
    /// Extra full turns added to each leg. Unequal values make the two
    /// particles meet.
    pub turns: [u32; 2],
    /// Number of segments per leg.
    pub samples: usize,
    /// Coincidence tolerance for the input points.
    pub tol: f64,
}

impl Default for ExchangeOptions {
    fn default() -> Self {
        Self { axis: None, turns: [0, 0], samples: 1024, tol: 1e-9 }
    }
}

impl ExchangeOptions {
    pub fn extra_turns(k: u32) -> Self {
        Self { turns: [k, k], ..Self::default() }
    }
}

/// Two legs t ↦ exp(tZ1)·start1 and t ↦ exp(tZ2)·start2 on a shared grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairPath {
    pub generator: Generator,
    /// Z_i = angles[i] · generator.
    pub angles: [f64; 2],
    pub mode: Mode,
    pub start: [PhasePoint; 2],
    pub first: SampledPath<PhasePoint>,
    pub second: SampledPath<PhasePoint>,
}

/// Lorentz matrix of a spatial rotation.
fn lorentz_rotation(r: &SO3Element) -> LorentzElement {
    let mut m = Matrix4::identity();
    m.fixed_view_mut::<3, 3>(1, 1).copy_from(&r.m);
    LorentzElement { m }
}

fn spatial(v: &Vector4<f64>) -> Vector3<f64> {
    Vector3::new(v[1], v[2], v[3])
}

impl PairPath {
    fn sampled(generator: Generator, angles: [f64; 2], mode: Mode, start: [PhasePoint; 2], samples: usize) -> Result<Self> {
        if samples == 0 {
            return Err(Error::domain("an exchange leg needs at least one segment"));
        }
        let mut p = PairPath {
            generator,
            angles,
            mode,
            start,
            first: SampledPath { t: vec![0.0], points: Vec::new() },
            second: SampledPath { t: vec![0.0], points: Vec::new() },
        };
        let mut legs = [Vec::with_capacity(samples + 1), Vec::with_capacity(samples + 1)];
        for k in 0..=samples {
            let t = k as f64 / samples as f64;
            for (leg, pts) in legs.iter_mut().enumerate() {
                pts.push(p.base_action(leg, t)?.act(&p.start[leg])?);
            }
        }
        let [a, b] = legs;
        p.first = SampledPath::uniform(a)?;
        p.second = SampledPath::uniform(b)?;
        Ok(p)
    }

    /// exp(t Z_leg) as an element acting on the bundle.
    pub fn element(&self, leg: usize, t: f64) -> Result<GroupElement> {
        if leg > 1 {
            return Err(Error::domain("leg index must be 0 or 1"));
        }
        let theta = t * self.angles[leg];
        Ok(match self.generator {
            Generator::SphereRotation { axis } => GroupElement::Su2 { alpha: SU2Element::rotation(&axis, theta)? },
            Generator::RestFrameRotation { frame, axis } => {
                let r = SL2CElement::from_su2(&SU2Element::rotation(&axis, theta)?);
                let alpha = frame * r * frame.inverse();
                let lorentz = sl2c_to_lorentz(&alpha, 1e-8)?;
                let from = self.start[leg].position();
                let to = self.start[1 - leg].position();
                let target = from + (to - from) * t;
                let moved = lorentz.apply(&Vector4::new(0.0, from.x, from.y, from.z));
                GroupElement::Sl2c { alpha, translation: Vector4::new(0.0, target.x, target.y, target.z) - moved }
            }
            Generator::SpatialRotation { axis, center } => {
                let r = SO3Element::axis_angle(&axis, theta);
                let shift = center - r.apply(&center);
                GroupElement::Poincare {
                    lorentz: lorentz_rotation(&r),
                    translation: Vector4::new(0.0, shift.x, shift.y, shift.z),
                }
            }
            Generator::PlanarRotation { center } => {
                let m = planar_rotation(theta);
                let c = Vector3::new(0.0, center.x, center.y);
                GroupElement::Planar { lorentz: m, translation: c - m * c }
            }
            Generator::AnyonRotation => GroupElement::AnyonRotation { beta: theta },
        })
    }

    /// The action of exp(t Z_leg) on the base.
    pub fn base_action(&self, leg: usize, t: f64) -> Result<SymmetryAction> {
        Ok(match self.element(leg, t)? {
            GroupElement::Su2 { alpha } => SymmetryAction::Rotation(crate::algebra::su2_to_so3(&alpha, 1e-8)?),
            GroupElement::Sl2c { alpha, translation } => {
                SymmetryAction::Poincare { lorentz: sl2c_to_lorentz(&alpha, 1e-8)?, translation }
            }
            GroupElement::Poincare { lorentz, translation } => SymmetryAction::Poincare { lorentz, translation },
            GroupElement::Planar { lorentz, translation } => SymmetryAction::Planar { lorentz, translation },
            GroupElement::AnyonRotation { beta } => SymmetryAction::AnyonRotation(beta),
            _ => unreachable!("exchange generators produce base-acting elements"),
        })
    }

    /// Both particles at parameter t.
    pub fn positions(&self, t: f64) -> Result<(PhasePoint, PhasePoint)> {
        Ok((self.base_action(0, t)?.act(&self.start[0])?, self.base_action(1, t)?.act(&self.start[1])?))
    }

    /// Rotation angle of g2·g1 (both legs share the generator).
    pub fn net_rotation(&self) -> f64 {
        self.angles[0] + self.angles[1]
    }

    /// max(d(g1·start1, start2), d(g2·start2, start1)).
    pub fn endpoint_defect(&self) -> Result<f64> {
        let (a, b) = self.positions(1.0)?;
        Ok(a.chart_distance(&self.start[1]).max(b.chart_distance(&self.start[0])))
    }

    /// The same exchange with `samples` segments per leg.
    pub fn resampled(&self, samples: usize) -> Result<PairPath> {
        Self::sampled(self.generator, self.angles, self.mode, self.start.clone(), samples)
    }

    /// The rest-frame exchange transformed by Λ: starting points Λ·start,
    /// generator Λ Z Λ⁻¹.
    pub fn conjugated(&self, lambda: &SL2CElement) -> Result<PairPath> {
        let Generator::RestFrameRotation { frame, axis } = self.generator else {
            return Err(Error::Unsupported("only rest-frame exchanges are conjugated by Lorentz elements".into()));
        };
        let action = SymmetryAction::Poincare { lorentz: sl2c_to_lorentz(lambda, 1e-8)?, translation: Vector4::zeros() };
        let start = [action.act(&self.start[0])?, action.act(&self.start[1])?];
        let generator = Generator::RestFrameRotation { frame: *lambda * frame, axis };
        Self::sampled(generator, self.angles, self.mode, start, self.first.len() - 1)
    }
}

fn leg_angles(circle: &Circle, mode: Mode, turns: [u32; 2]) -> [f64; 2] {
    let extra = |k: u32| TAU * f64::from(k);
    match mode {
        Mode::TypeI => [circle.gamma + extra(turns[0]), -(circle.gamma + extra(turns[1]))],
        Mode::TypeII => [circle.gamma + extra(turns[0]), circle.gamma_prime + extra(turns[1])],
    }
}

/// Exchange of two spin-sphere points along their common circle, with
/// `extra_turns` full turns added to each leg so that g2·g1 is a rotation
/// by 2π(2k + 1) for TypeII.
pub fn build_exchange(x1: &PhasePoint, x2: &PhasePoint, mode: Mode, extra_turns: u32) -> Result<PairPath> {
    build_pair_exchange(x1, x2, mode, &ExchangeOptions::extra_turns(extra_turns))
}

/// Exchange path for any supported space.
///
/// * SpinSphere: along the common circle.
/// * MassiveSpin: equal momenta I; the rest-frame spin directions are
///   exchanged along their common circle while x moves in a straight line.
/// * FreeRel: rotation by π about the line through the midpoint of x1, x2
///   along I⃗1 + I⃗2; needs I⃗2 to be the image of I⃗1 under that rotation.
/// * ThreeD: planar rotation by π about the midpoint; needs I⃗2 = −I⃗1.
/// * Anyon: rotation about the origin; needs equal radii and momenta
///   rotated by the same angle as the positions.
pub fn build_pair_exchange(p1: &PhasePoint, p2: &PhasePoint, mode: Mode, opts: &ExchangeOptions) -> Result<PairPath> {
    if p1.space != p2.space {
        return Err(Error::domain("exchanged points lie on different spaces"));
    }
    let tol = opts.tol;
    let start = [p1.clone(), p2.clone()];
    let half_turns = |mode: Mode| {
        let c = Circle { axis: Vector3::z(), gamma: PI, gamma_prime: PI };
        leg_angles(&c, mode, opts.turns)
    };
    match p1.space {
        PhaseSpaceId::SpinSphere { .. } => {
            let c = circle_through(&p1.sphere_point().normalize(), &p2.sphere_point().normalize(), opts.axis.as_ref(), tol)?;
            let g = Generator::SphereRotation { axis: c.axis };
            PairPath::sampled(g, leg_angles(&c, mode, opts.turns), mode, start, opts.samples)
        }
        PhaseSpaceId::MassiveSpin { .. } => {
            let i = p1.momentum();
            if (i - p2.momentum()).norm() > tol * 1e3 {
                return Err(Error::domain("massive exchange needs equal momenta I1 = I2"));
            }
            let frame = SL2CElement::boost_to(&i)?;
            let back = sl2c_to_lorentz(&frame.inverse(), 1e-8)?;
            let n1 = spatial(&back.apply(&p1.spin_vector())).normalize();
            let n2 = spatial(&back.apply(&p2.spin_vector())).normalize();
            let c = circle_through(&n1, &n2, opts.axis.as_ref(), tol)?;
            let g = Generator::RestFrameRotation { frame, axis: c.axis };
            PairPath::sampled(g, leg_angles(&c, mode, opts.turns), mode, start, opts.samples)
        }
        PhaseSpaceId::FreeRel { .. } => {
            let (x1, x2) = (p1.position(), p2.position());
            let d = x2 - x1;
            if d.norm() <= tol {
                return Err(Error::Degenerate("the two positions coincide".into()));
            }
            let (i1, i2) = (spatial(&p1.momentum()), spatial(&p2.momentum()));
            let s = i1 + i2;
            let axis = if s.norm() > 1e-6 {
                s.normalize()
            } else {
                let c = i1.cross(&d);
                if c.norm() > 1e-6 {
                    c.normalize()
                } else {
                    d.cross(&orthogonal_seed(&d)).normalize()
                }
            };
            let r = SO3Element::axis_angle(&axis, PI);
            let center = 0.5 * (x1 + x2);
            let defect = (r.apply(&(x1 - center)) - (x2 - center)).norm().max((r.apply(&i1) - i2).norm());
            if defect > tol * 1e3 {
                return Err(Error::domain(format!("pair is not exchangeable by a half turn (defect {defect:.3e})")));
            }
            let g = Generator::SpatialRotation { axis, center };
            PairPath::sampled(g, half_turns(mode), mode, start, opts.samples)
        }
        PhaseSpaceId::ThreeD { .. } => {
            let (c1, c2) = (&p1.coords, &p2.coords);
            let d = Vector2::new(c2[0] - c1[0], c2[1] - c1[1]);
            if d.norm() <= tol {
                return Err(Error::Degenerate("the two positions coincide".into()));
            }
            let defect = (c1[2] - c2[2]).abs().max((c1[3] + c2[3]).abs()).max((c1[4] + c2[4]).abs());
            if defect > tol * 1e3 {
                return Err(Error::domain(format!("planar exchange needs I⃗2 = −I⃗1 (defect {defect:.3e})")));
            }
            let center = Vector2::new(0.5 * (c1[0] + c2[0]), 0.5 * (c1[1] + c2[1]));
            PairPath::sampled(Generator::PlanarRotation { center }, half_turns(mode), mode, start, opts.samples)
        }
        PhaseSpaceId::Anyon { .. } => {
            let (a, b) = (anyon_chart(&p1.cover()), anyon_chart(&p2.cover()));
            if (a - b).norm() <= tol {
                return Err(Error::Degenerate("the two positions coincide".into()));
            }
            if (a.norm() - b.norm()).abs() > tol * 1e3 * a.norm().max(1.0) {
                return Err(Error::domain("anyon exchange needs equal distances from the origin"));
            }
            let delta = (a.x * b.y - a.y * b.x).atan2(a.dot(&b)).rem_euclid(TAU);
            let (s, c) = delta.sin_cos();
            let rotated = Matrix2::new(c, -s, s, c) * Vector2::new(p1.coords[2], p1.coords[3]);
            let defect = (rotated - Vector2::new(p2.coords[2], p2.coords[3])).norm();
            if defect > tol * 1e3 {
                return Err(Error::domain(format!("anyon momenta are not co-rotated (defect {defect:.3e})")));
            }
            let circle = Circle { axis: Vector3::z(), gamma: delta, gamma_prime: TAU - delta };
            PairPath::sampled(Generator::AnyonRotation, leg_angles(&circle, mode, opts.turns), mode, start, opts.samples)
        }
        PhaseSpaceId::Massless { .. } => {
            Err(Error::Unsupported("exchange paths are not constructed on the massless space".into()))
        }
    }
}

/// A unit vector not parallel to `d`.
fn orthogonal_seed(d: &Vector3<f64>) -> Vector3<f64> {
    let a = d.abs();
    if a.x <= a.y && a.x <= a.z {
        Vector3::x()
    } else if a.y <= a.z {
        Vector3::y()
    } else {
        Vector3::z()
    }
}

/// Result of the diagonal scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub crossed: bool,
    pub min_separation: f64,
    pub t_min: f64,
}

/// Coordinates in which the diagonal test measures distance.
fn chart_coords(p: &PhasePoint) -> Vec<f64> {
    match p.space {
        PhaseSpaceId::Anyon { .. } => {
            let x = anyon_chart(&p.cover());
            vec![x.x, x.y, p.coords[2], p.coords[3]]
        }
        _ => p.coords.clone(),
    }
}

/// Scans the pair separation on the sample grid and, on every segment,
/// at the closest approach of the linearly interpolated pair.
pub fn diagonal_crossing(p: &PairPath, eps: f64) -> Crossing {
    let diffs: Vec<Vec<f64>> = p
        .first
        .points
        .iter()
        .zip(&p.second.points)
        .map(|(a, b)| chart_coords(a).iter().zip(chart_coords(b)).map(|(x, y)| x - y).collect())
        .collect();
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut best = (f64::INFINITY, 0.0);
    for (k, d) in diffs.iter().enumerate() {
        let s = norm(d);
        if s < best.0 {
            best = (s, p.first.t[k]);
        }
    }
    for k in 0..diffs.len().saturating_sub(1) {
        let (d0, d1) = (&diffs[k], &diffs[k + 1]);
        let dd: Vec<f64> = d1.iter().zip(d0).map(|(a, b)| a - b).collect();
        let den: f64 = dd.iter().map(|x| x * x).sum();
        if den <= 0.0 {
            continue;
        }
        let u = (-d0.iter().zip(&dd).map(|(a, b)| a * b).sum::<f64>() / den).clamp(0.0, 1.0);
        let at: Vec<f64> = d0.iter().zip(&dd).map(|(a, b)| a + u * b).collect();
        let linear = norm(&at);
        if linear >= best.0 || u == 0.0 || u == 1.0 {
            continue;
        }
        // The chord estimate undershoots on curved legs; re-evaluate the
        // exact pair at the candidate parameter.
        let t = p.first.t[k] + u * (p.first.t[k + 1] - p.first.t[k]);
        let s = p.positions(t).map(|(a, b)| a.chart_distance(&b)).unwrap_or(linear);
        if s < best.0 {
            best = (s, t);
        }
    }
    Crossing { crossed: best.0 < eps, min_separation: best.0, t_min: best.1 }
}

/// A random pair of points that [`build_pair_exchange`] accepts, kept away
/// from coincident and antipodal configurations.
pub fn admissible_pair<R: Rng + ?Sized>(rng: &mut R, space: PhaseSpaceId) -> Result<(PhasePoint, PhasePoint)> {
    space.validate()?;
    let tol = 1e-9;
    match space {
        PhaseSpaceId::SpinSphere { s } => loop {
            let (a, b) = (sampling::unit_vector3(rng), sampling::unit_vector3(rng));
            if (a - b).norm() > 0.1 && (a + b).norm() > 0.1 {
                return Ok((PhasePoint::spin_sphere(s, a, tol)?, PhasePoint::spin_sphere(s, b, tol)?));
            }
        },
        PhaseSpaceId::MassiveSpin { m, s } => {
            let p = sampling::point(rng, space)?;
            let i = p.momentum();
            let boost = sl2c_to_lorentz(&SL2CElement::boost_to(&i)?, 1e-8)?;
            let (n1, n2) = loop {
                let (a, b) = (sampling::unit_vector3(rng), sampling::unit_vector3(rng));
                if (a - b).norm() > 0.1 && (a + b).norm() > 0.1 {
                    break (a, b);
                }
            };
            let j = |n: Vector3<f64>| boost.apply(&Vector4::new(0.0, n.x, n.y, n.z));
            let x2 = Vector3::from_fn(|_, _| sampling::normal(rng));
            let p1 = PhasePoint::project(space, &PhasePoint::massive_spin(m, s, p.position(), i, j(n1), 1e-6)?.coords)?;
            let p2 = PhasePoint::project(space, &PhasePoint::massive_spin(m, s, x2, i, j(n2), 1e-6)?.coords)?;
            Ok((p1, p2))
        }
        PhaseSpaceId::FreeRel { m } => {
            let i1 = sampling::point(rng, space)?.momentum();
            let axis = sampling::unit_vector3(rng);
            let center = Vector3::from_fn(|_, _| sampling::normal(rng));
            let v = loop {
                let raw = sampling::unit_vector3(rng);
                let v = raw - axis * raw.dot(&axis);
                if v.norm() > 0.1 {
                    break v * (0.5 + rng.random::<f64>());
                }
            };
            let r = SO3Element::axis_angle(&axis, PI);
            let i2s = r.apply(&spatial(&i1));
            let i2 = Vector4::new(i1[0], i2s.x, i2s.y, i2s.z);
            Ok((PhasePoint::free_rel(m, center + v, i1, tol)?, PhasePoint::free_rel(m, center - v, i2, tol)?))
        }
        PhaseSpaceId::ThreeD { m, s } => {
            let c = sampling::point(rng, space)?.coords;
            let x2 = loop {
                let x2 = Vector2::new(sampling::normal(rng), sampling::normal(rng));
                if (x2 - Vector2::new(c[0], c[1])).norm() > 0.1 {
                    break x2;
                }
            };
            let p1 = PhasePoint::three_d(m, s, Vector2::new(c[0], c[1]), Vector3::new(c[2], c[3], c[4]), tol)?;
            let p2 = PhasePoint::three_d(m, s, x2, Vector3::new(c[2], -c[3], -c[4]), tol)?;
            Ok((p1, p2))
        }
        PhaseSpaceId::Anyon { alpha } => {
            let p = sampling::point(rng, space)?;
            let delta = rng.random_range(0.3..TAU - 0.3);
            let c = p.cover();
            let shift = delta / TAU;
            let (s, co) = delta.sin_cos();
            let mom = Matrix2::new(co, -s, s, co) * Vector2::new(p.coords[2], p.coords[3]);
            let p2 = PhasePoint::anyon(alpha, [c[0] + shift, c[1] + shift], mom, tol)?;
            Ok((p, p2))
        }
        PhaseSpaceId::Massless { .. } => {
            Err(Error::Unsupported("exchange paths are not constructed on the massless space".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sp(x: f64, y: f64, z: f64) -> PhasePoint {
        PhasePoint::spin_sphere(0.5, Vector3::new(x, y, z).normalize(), 1e-9).unwrap()
    }

    #[test]
    fn type_two_is_rigid_and_never_crosses() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let (a, b) = admissible_pair(&mut rng, PhaseSpaceId::SpinSphere { s: 0.5 }).unwrap();
            let p = build_exchange(&a, &b, Mode::TypeII, 0).unwrap();
            assert!(p.endpoint_defect().unwrap() < 1e-9);
            assert_relative_eq!(p.net_rotation(), TAU, epsilon = 1e-12);
            let gap = a.chart_distance(&b);
            for (u, v) in p.first.points.iter().zip(&p.second.points) {
                assert!((u.chart_distance(v) - gap).abs() < 1e-9);
            }
            let c = diagonal_crossing(&p, 1e-6);
            assert!(!c.crossed);
            assert_relative_eq!(c.min_separation, gap, epsilon = 1e-9);
        }
    }

    #[test]
    fn type_one_meets_halfway() {
        let p = build_exchange(&sp(1.0, 0.0, 0.0), &sp(0.0, 1.0, 0.0), Mode::TypeI, 0).unwrap();
        let c = diagonal_crossing(&p, 1e-6);
        assert!(c.crossed);
        assert_relative_eq!(c.t_min, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn unequal_turns_cross() {
        let opts = ExchangeOptions { turns: [0, 1], axis: Some(Vector3::z()), ..Default::default() };
        let p = build_pair_exchange(&sp(1.0, 0.0, 0.0), &sp(0.0, 1.0, 0.0), Mode::TypeII, &opts).unwrap();
        assert_relative_eq!(p.net_rotation(), 2.0 * TAU, epsilon = 1e-12);
        assert!(diagonal_crossing(&p, 1e-6).crossed);
    }

    #[test]
    fn constant_coincident_paths_cross_at_start() {
        let a = sp(0.0, 0.0, 1.0);
        let mut p = build_exchange(&a, &sp(1.0, 0.0, 0.0), Mode::TypeII, 0).unwrap();
        p.first = SampledPath::uniform(vec![a.clone(); 5]).unwrap();
        p.second = p.first.clone();
        let c = diagonal_crossing(&p, 1e-6);
        assert!(c.crossed);
        assert_eq!(c.t_min, 0.0);
    }

    #[test]
    fn every_space_admits_type_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for space in [
            PhaseSpaceId::MassiveSpin { m: 1.3, s: 0.5 },
            PhaseSpaceId::FreeRel { m: 0.7 },
            PhaseSpaceId::ThreeD { m: 1.1, s: 0.4 },
            PhaseSpaceId::Anyon { alpha: 1.0 },
        ] {
            for _ in 0..5 {
                let (a, b) = admissible_pair(&mut rng, space).unwrap();
                let p = build_pair_exchange(&a, &b, Mode::TypeII, &ExchangeOptions::default()).unwrap();
                assert!(p.endpoint_defect().unwrap() < 1e-8, "{space:?}");
                assert!(!diagonal_crossing(&p, 1e-6).crossed, "{space:?}");
                let q = build_pair_exchange(&a, &b, Mode::TypeI, &ExchangeOptions::default()).unwrap();
                assert!(diagonal_crossing(&q, 1e-6).crossed, "{space:?}");
            }
        }
    }
}
