use nalgebra::Vector3;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::phasespaces::PhasePoint;

/// A curve sampled at strictly increasing parameters t ∈ [0, 1].
///
/// Base paths (`P = PhasePoint`) interpolate along great circles on the
/// sphere and linearly in the chart elsewhere; total-space paths
/// (`P = BundlePoint`) interpolate linearly and re-impose the constraints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledPath<P> {
    pub t: Vec<f64>,
    pub points: Vec<P>,
}

impl<P: Clone> SampledPath<P> {
    pub fn new(t: Vec<f64>, points: Vec<P>) -> Result<Self> {
        if t.len() != points.len() || t.is_empty() {
            return Err(Error::domain("path needs as many parameters as points, and at least one"));
        }
        if t.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::domain("path parameters must be strictly increasing"));
        }
        Ok(Self { t, points })
    }

    /// Uniform parameters 0, 1/(N−1), …, 1.
    pub fn uniform(points: Vec<P>) -> Result<Self> {
        let n = points.len();
        let t = if n == 1 { vec![0.0] } else { (0..n).map(|k| k as f64 / (n - 1) as f64).collect() };
        Self::new(t, points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// This path followed by `next` (whose first point must repeat our last),
    /// reparametrized onto [0, 1].
    pub fn concat(&self, next: &SampledPath<P>) -> Result<SampledPath<P>> {
        let mut t: Vec<f64> = self.t.iter().map(|x| 0.5 * x).collect();
        let mut pts = self.points.clone();
        t.extend(next.t.iter().skip(1).map(|x| 0.5 + 0.5 * x));
        pts.extend(next.points.iter().skip(1).cloned());
        SampledPath::new(t, pts)
    }

    /// The same points traversed backwards.
    pub fn reversed(&self) -> SampledPath<P> {
        let t = self.t.iter().rev().map(|x| 1.0 - x).collect();
        let points = self.points.iter().rev().cloned().collect();
        SampledPath { t, points }
    }
}

impl SampledPath<PhasePoint> {
    /// Largest chart distance between consecutive samples.
    pub fn max_step(&self) -> f64 {
        self.points.windows(2).map(|w| w[0].chart_distance(&w[1])).fold(0.0, f64::max)
    }

    pub fn is_closed(&self, tol: f64) -> bool {
        match (self.points.first(), self.points.last()) {
            (Some(a), Some(b)) => a.chart_distance(b) <= tol,
            _ => false,
        }
    }
}

/// The circle of angular radius `radius` about `axis` on the sphere of spin
/// `s`, traversed counterclockwise (seen from outside) from a fixed start,
/// with `samples` segments.
pub fn circle_path(s: f64, axis: &Vector3<f64>, radius: f64, samples: usize) -> Result<SampledPath<PhasePoint>> {
    let a = axis.try_normalize(1e-12).ok_or_else(|| Error::domain("zero axis"))?;
    if samples < 3 {
        return Err(Error::domain("a loop needs at least three segments"));
    }
    let helper = if a.x.abs() < 0.9 { Vector3::x() } else { Vector3::y() };
    let e1 = (helper - a * a.dot(&helper)).normalize();
    let e2 = a.cross(&e1);
    let pts = (0..=samples)
        .map(|k| {
            // The last sample repeats the first exactly.
            let phi = if k == samples { 0.0 } else { TAU * k as f64 / samples as f64 };
            let x = a * radius.cos() + (e1 * phi.cos() + e2 * phi.sin()) * radius.sin();
            PhasePoint::spin_sphere(s, x.normalize(), 1e-9)
        })
        .collect::<Result<Vec<_>>>()?;
    SampledPath::uniform(pts)
}
