use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use super::SampledPath;
use crate::algebra::{sl2c_to_lorentz, DiracSpinor, Spinor2, SL2CElement, C64};
use crate::error::{Error, Result};
use crate::numerics::wrap_angle;
use crate::phasespaces::PhasePoint;
use crate::prequant::{omega_raw, BundleId, BundlePoint, Representative};

/// exp(i · integral), with an error estimate for the integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Holonomy {
    pub integral: f64,
    pub error: f64,
}

impl Holonomy {
    pub fn phase(&self) -> C64 {
        C64::from_polar(1.0, self.integral)
    }
}

/// Total-space point at parameter ½ between two nearby samples.
fn midpoint(a: &BundlePoint, b: &BundlePoint) -> Result<BundlePoint> {
    let (ra, rb) = (a.to_real(), b.to_real());
    let avg: Vec<f64> = ra.iter().zip(&rb).map(|(x, y)| 0.5 * (x + y)).collect();
    a.with_real(&avg).retract()
}

fn chord(a: &BundlePoint, b: &BundlePoint) -> Vec<f64> {
    a.to_real().iter().zip(&b.to_real()).map(|(x, y)| y - x).collect()
}

/// Midpoint-rule value of ∫ω along the straight segment a → b.
fn segment(a: &BundlePoint, b: &BundlePoint) -> Result<f64> {
    Ok(omega_raw(&midpoint(a, b)?, &chord(a, b)))
}

fn check_same_sheet(a: &BundlePoint, b: &BundlePoint) -> Result<()> {
    if let (Representative::Anyon { winding: w1, .. }, Representative::Anyon { winding: w2, .. }) = (&a.rep, &b.rep) {
        if w1 != w2 {
            return Err(Error::domain("consecutive anyon samples carry different windings"));
        }
    }
    Ok(())
}

/// ∫ω along a sampled total-space path; `phase()` gives exp(i∫ω).
///
/// Each segment uses the midpoint rule on the chord and on its two halves;
/// the two are combined by Richardson extrapolation and their difference is
/// reported as the error.
pub fn line_holonomy(b: &BundleId, lifted: &SampledPath<BundlePoint>) -> Result<Holonomy> {
    let mut coarse = 0.0;
    let mut fine = 0.0;
    for p in &lifted.points {
        if p.bundle != *b {
            return Err(Error::domain("path leaves the bundle"));
        }
        p.validate(1e-6)?;
    }
    for w in lifted.points.windows(2) {
        check_same_sheet(&w[0], &w[1])?;
        let mid = midpoint(&w[0], &w[1])?;
        coarse += segment(&w[0], &w[1])?;
        fine += segment(&w[0], &mid)? + segment(&mid, &w[1])?;
    }
    Ok(Holonomy { integral: (4.0 * fine - coarse) / 3.0, error: (fine - coarse).abs() })
}

/// A total-space point over `p`, with its phase chosen close to `near`.
pub fn lift_point(b: &BundleId, p: &PhasePoint, near: &BundlePoint) -> Result<BundlePoint> {
    if p.space != b.base() {
        return Err(Error::domain("point is not on the bundle's base"));
    }
    let rep = match (&near.rep, b) {
        (Representative::Hopf { xi }, _) => {
            let eta = Spinor2::from_bloch(&p.sphere_point())?;
            let u = xi.inner(&eta);
            Representative::Hopf { xi: eta.phase(-u.arg()) }
        }
        (Representative::Dirac { psi: near_psi, .. }, _) => {
            let psi = dirac_spinor_over(p)?;
            let u = near_psi.bar_inner(&psi);
            Representative::Dirac { x: p.position(), psi: psi.phase(-u.arg()) }
        }
        (Representative::Trivial { phase, .. }, _) => Representative::Trivial { point: p.clone(), phase: *phase },
        (Representative::Anyon { phase, winding, .. }, _) => {
            Representative::Anyon { point: p.clone(), phase: *phase, winding: *winding }
        }
    };
    Ok(BundlePoint { bundle: *b, rep })
}

/// ψ = U(L)(ξ, ξ)/√2 with L the boost to I and ξ the spinor of the rest-frame spin direction.
pub fn dirac_spinor_over(p: &PhasePoint) -> Result<DiracSpinor> {
    let i = p.momentum();
    let j = p.spin_vector();
    let boost = SL2CElement::boost_to(&i)?;
    let back = sl2c_to_lorentz(&boost.inverse(), 1e-8)?;
    let j_rest = back.apply(&j);
    let n = Vector3::new(j_rest[1], j_rest[2], j_rest[3]);
    let xi = Spinor2::from_bloch(&n.normalize())?;
    let half = xi.scale(C64::from(std::f64::consts::FRAC_1_SQRT_2));
    Ok(boost.act_dirac(&DiracSpinor::from_blocks(&half, &half)))
}

/// Parallel transport of `xi0` along a base path.
///
/// Each new sample is fixed by choosing its fiber phase so that the
/// midpoint-rule value of ω on the segment from the previous sample
/// vanishes; the lift is therefore horizontal to the accuracy of the
/// quadrature used by [`line_holonomy`].
pub fn horizontal_lift(
    b: &BundleId,
    base: &SampledPath<PhasePoint>,
    xi0: &BundlePoint,
) -> Result<SampledPath<BundlePoint>> {
    if xi0.bundle != *b {
        return Err(Error::domain("start point belongs to a different bundle"));
    }
    let start = xi0.project()?;
    if start.chart_distance(&base.points[0]) > 1e-6 {
        return Err(Error::domain("start point does not lie over the start of the path"));
    }
    let mut out = vec![xi0.clone()];
    for p in base.points.iter().skip(1) {
        p.validate(1e-6)?;
        let cur = out.last().expect("non-empty");
        let eta = lift_point(b, p, cur)?;
        let mut theta = 0.0;
        for _ in 0..12 {
            let cand = eta.shift_phase(theta);
            let mid = midpoint(cur, &cand)?;
            let f = omega_raw(&mid, &chord(cur, &cand));
            let df = omega_raw(&mid, &cand.vertical());
            if df.abs() < 1e-300 {
                break;
            }
            let step = f / df;
            theta -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        out.push(eta.shift_phase(theta));
    }
    SampledPath::new(base.t.clone(), out)
}

/// Holonomy of a closed base loop: exp(i∮ω) over the horizontal lift closed
/// by a vertical segment, which by Stokes is exp(i ∫Ω) over a surface the
/// loop bounds. The estimate is Richardson-extrapolated against the lift of
/// every other sample when the number of segments is even.
pub fn loop_holonomy(b: &BundleId, base_loop: &SampledPath<PhasePoint>, xi0: &BundlePoint) -> Result<Holonomy> {
    if !base_loop.is_closed(1e-9) {
        return Err(Error::domain("base path is not closed"));
    }
    let k = f64::from(b.fiber_power());
    let transported = |path: &SampledPath<PhasePoint>| -> Result<f64> {
        let lift = horizontal_lift(b, path, xi0)?;
        let end = lift.points.last().expect("non-empty");
        Ok(wrap_angle(-k * xi0.phase_offset(end, 1e-6)?))
    };
    let fine = transported(base_loop)?;
    let segments = base_loop.len() - 1;
    if segments % 2 != 0 || segments < 4 {
        return Ok(Holonomy { integral: fine, error: f64::NAN });
    }
    let half = SampledPath::new(
        base_loop.t.iter().step_by(2).copied().collect(),
        base_loop.points.iter().step_by(2).cloned().collect(),
    )?;
    let coarse = transported(&half)?;
    let diff = wrap_angle(fine - coarse);
    Ok(Holonomy { integral: wrap_angle(fine + diff / 3.0), error: diff.abs() / 3.0 })
}
