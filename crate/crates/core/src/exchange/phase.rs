use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use super::path::{build_pair_exchange, diagonal_crossing, ExchangeOptions, Mode, PairPath};
use crate::algebra::{DiracSpinor, SL2CElement, Spinor2, C64};
use crate::error::{Error, Result};
use crate::holonomy::dirac_spinor_over;
use crate::numerics::wrap_angle;
use crate::phasespaces::PhasePoint;
use crate::prequant::{lifted_group_action, BundleId, BundlePoint, GroupElement, PairClass};
use crate::tolerance::Tolerances;

/// Phase relating [g1·ξ1, g2·ξ2] to [ξ2, ξ1], with diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExchangeOutcome {
    /// The admissible phase nearest to the computed one.
    pub phase: C64,
    /// Computed bundle phase angle before snapping. For anyons the deck
    /// winding is reduced mod 2 first.
    pub theta: f64,
    /// Total deck winding picked up by the two legs (anyons only).
    pub winding: i64,
    /// |e^{iθ} − phase|.
    pub snap_distance: f64,
    /// Canonical-form distance between [g1·ξ1, g2·ξ2] and e^{iθ}·[ξ2, ξ1].
    pub class_residual: f64,
    /// Largest distance between a lifted leg sample and the base path.
    pub lift_defect: f64,
    pub net_rotation: f64,
    pub min_separation: f64,
    /// Sum over both legs of ∫ m I⃗·dx (Dirac bundles; zero otherwise).
    pub translation_term: f64,
}

/// Phases an exchange may produce on `b`.
pub fn admissible_phases(b: &BundleId) -> Vec<C64> {
    match b {
        BundleId::Anyon { alpha } => anyon_exchange_phases(*alpha),
        _ => vec![C64::new(1.0, 0.0), C64::new(-1.0, 0.0)],
    }
}

/// The exchange phases allowed on the anyon bundle, (−1)^f e^{ilα} for
/// f, l ∈ {0, 1}; the set has two elements when α is a multiple of π.
pub fn anyon_exchange_phases(alpha: f64) -> Vec<C64> {
    let mut out: Vec<C64> = Vec::with_capacity(4);
    for l in 0..2 {
        for f in 0..2 {
            let z = C64::from_polar(1.0, f64::from(f) * PI + f64::from(l) * alpha);
            if out.iter().all(|w| (w - z).norm() > 1e-9) {
                out.push(z);
            }
        }
    }
    out
}

/// A total-space point over `p` with a fixed, reproducible phase.
pub fn reference_lift(b: &BundleId, p: &PhasePoint, tol: f64) -> Result<BundlePoint> {
    b.validate()?;
    if p.space != b.base() {
        return Err(Error::domain("point is not on the bundle's base"));
    }
    match *b {
        BundleId::Hopf { n } => BundlePoint::hopf(n, Spinor2::from_bloch(&p.sphere_point().normalize())?, tol),
        BundleId::Dirac { n, m } => BundlePoint::dirac(n, m, p.position(), dirac_spinor_over(p)?, tol),
        BundleId::TrivialU1 { .. } => BundlePoint::trivial(p.clone(), 0.0, tol),
        BundleId::Anyon { .. } => BundlePoint::anyon(p.clone(), 0.0, 0),
    }
}

/// [ξ1, ξ2] built from [`reference_lift`]s of the two points.
pub fn start_class(b: &BundleId, p1: &PhasePoint, p2: &PhasePoint, tol: f64) -> Result<PairClass> {
    PairClass::new(reference_lift(b, p1, tol)?, reference_lift(b, p2, tol)?)
}

/// Lifted image of `xi` under exp(t Z_leg) on every grid point, returning
/// the endpoint and the largest deviation from the base path.
fn lift_leg(b: &BundleId, p: &PairPath, leg: usize, xi: &BundlePoint) -> Result<(BundlePoint, f64)> {
    let base = if leg == 0 { &p.first } else { &p.second };
    let mut defect = 0.0f64;
    let mut last = xi.clone();
    for (t, q) in base.t.iter().zip(&base.points) {
        last = lifted_group_action(b, &p.element(leg, *t)?, xi)?;
        defect = defect.max(last.project()?.chart_distance(q));
    }
    Ok((last, defect))
}

/// Σ_legs ∫ m I⃗·dx along the sampled base paths.
fn translation_term(b: &BundleId, p: &PairPath) -> f64 {
    let BundleId::Dirac { m, .. } = *b else { return 0.0 };
    let leg = |path: &crate::holonomy::SampledPath<PhasePoint>| -> f64 {
        path.points
            .windows(2)
            .map(|w| {
                let (c0, c1) = (&w[0].coords, &w[1].coords);
                (0..3).map(|k| 0.5 * (c0[4 + k] + c1[4 + k]) * (c1[k] - c0[k])).sum::<f64>()
            })
            .sum()
    };
    m * (leg(&p.first) + leg(&p.second))
}

/// Runs the exchange `p` on the bundle and returns the phase e^{iθ} with
/// [g1·ξ1, g2·ξ2] = e^{iθ}·[ξ2, ξ1].
///
/// Both legs are lifted through the smooth family exp(tZ_i); the fiber
/// offsets u_i at the endpoints are read off the representatives, and the
/// bundle phase is e^{ik(u1 + u2)} with k the power by which the fiber U(1)
/// acts on representatives. On the anyon bundle the joint deck
/// identification of the pair carries e^{2iα}, so the winding is reduced
/// mod 2.
pub fn exchange_phase(b: &BundleId, p: &PairPath, start: &PairClass, tol: &Tolerances) -> Result<ExchangeOutcome> {
    b.validate()?;
    if start.bundle() != *b {
        return Err(Error::domain("start class belongs to a different bundle"));
    }
    if p.start[0].space != b.base() {
        return Err(Error::domain("exchange path is not on the bundle's base"));
    }
    let (xi1, xi2) = (&start.first, &start.second);
    let base_gap = xi1.project()?.chart_distance(&p.start[0]).max(xi2.project()?.chart_distance(&p.start[1]));
    if base_gap > tol.geom * 1e3 {
        return Err(Error::domain(format!("start class does not lie over the path's start (distance {base_gap:.3e})")));
    }
    let crossing = diagonal_crossing(p, tol.diag);
    if crossing.crossed {
        return Err(Error::DiagonalCrossing { t: crossing.t_min, separation: crossing.min_separation });
    }
    let (eta1, d1) = lift_leg(b, p, 0, xi1)?;
    let (eta2, d2) = lift_leg(b, p, 1, xi2)?;
    let match_tol = tol.geom * 1e4;
    let (theta, winding, rep_shift) = match *b {
        BundleId::Anyon { alpha } => {
            let (f1, w1) = xi2.anyon_offset(&eta1, match_tol)?;
            let (f2, w2) = xi1.anyon_offset(&eta2, match_tol)?;
            let w = w1 + w2;
            let shift = f1 + f2 + w as f64 * alpha;
            (f1 + f2 + w.rem_euclid(2) as f64 * alpha, w, shift)
        }
        _ => {
            let u = xi2.phase_offset(&eta1, match_tol)? + xi1.phase_offset(&eta2, match_tol)?;
            (f64::from(b.fiber_power()) * u, 0, u)
        }
    };
    let swapped = PairClass::new(xi2.clone(), xi1.clone())?.shift_first(rep_shift);
    let class_residual = PairClass::new(eta1, eta2)?.class_distance(&swapped)?;
    if class_residual > tol.snap {
        return Err(Error::inconsistent(format!(
            "exchanged class differs from the phase-shifted swapped class by {class_residual:.3e}"
        )));
    }
    let z = C64::from_polar(1.0, theta);
    let (phase, snap_distance) = admissible_phases(b)
        .into_iter()
        .map(|w| (w, (w - z).norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("admissible set is nonempty");
    if snap_distance > tol.snap {
        return Err(Error::inconsistent(format!(
            "exchange phase e^{{i·{:.9}}} is {snap_distance:.3e} from every admissible value",
            wrap_angle(theta)
        )));
    }
    let translation_term = translation_term(b, p);
    if translation_term.abs() > tol.quad {
        return Err(Error::inconsistent(format!("translation terms do not cancel between legs: {translation_term:.3e}")));
    }
    Ok(ExchangeOutcome {
        phase,
        theta,
        winding,
        snap_distance,
        class_residual,
        lift_defect: d1.max(d2),
        net_rotation: p.net_rotation(),
        min_separation: crossing.min_separation,
        translation_term,
    })
}

/// Statistics selected by the exchange analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictKind {
    BoseOnly,
    SpinStatistics { f: u8 },
    /// Exchange phase (−1)^f e^{ilα}.
    Anyonic { f: u8, l: u8, phase: C64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerdictDiagnostic {
    /// Rotation angle of g2·g1 (the same for every sample).
    pub net_rotation: f64,
    /// Smallest pair separation over all samples and times.
    pub min_separation: f64,
    /// Bundle phase angle of the first sample, in (−π, π].
    pub accumulated_phase: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StatisticsVerdict {
    pub kind: VerdictKind,
    pub diagnostic: VerdictDiagnostic,
}

fn verdict_kind(b: &BundleId, o: &ExchangeOutcome) -> Result<VerdictKind> {
    let f = u8::from(o.phase.re < 0.0);
    match *b {
        BundleId::Hopf { .. } | BundleId::Dirac { .. } => Ok(VerdictKind::SpinStatistics { f }),
        BundleId::TrivialU1 { .. } if f == 0 => Ok(VerdictKind::BoseOnly),
        BundleId::TrivialU1 { .. } => Err(Error::inconsistent("spinless bundle produced a fermionic exchange")),
        BundleId::Anyon { alpha } => {
            let l = o.winding.rem_euclid(2) as u8;
            let f = u8::from((o.theta - f64::from(l) * alpha).cos() < 0.0);
            Ok(VerdictKind::Anyonic { f, l, phase: o.phase })
        }
    }
}

fn same_kind(a: &VerdictKind, b: &VerdictKind, tol: f64) -> bool {
    match (a, b) {
        (VerdictKind::Anyonic { f, l, phase }, VerdictKind::Anyonic { f: g, l: m, phase: q }) => {
            f == g && l == m && (phase - q).norm() <= tol
        }
        _ => a == b,
    }
}

/// Runs TypeII exchanges on every sample pair and checks that they agree.
/// Samples are processed in order, so the reduction is deterministic.
pub fn classify_statistics(
    b: &BundleId,
    samples: &[(PhasePoint, PhasePoint)],
    tol: &Tolerances,
) -> Result<StatisticsVerdict> {
    if samples.is_empty() {
        return Err(Error::domain("classification needs at least one sample pair"));
    }
    let opts = ExchangeOptions { samples: tol.diag_grid, tol: tol.geom, ..ExchangeOptions::default() };
    let mut verdict: Option<StatisticsVerdict> = None;
    for (k, (p1, p2)) in samples.iter().enumerate() {
        let path = build_pair_exchange(p1, p2, Mode::TypeII, &opts)?;
        let outcome = exchange_phase(b, &path, &start_class(b, p1, p2, tol.norm)?, tol)?;
        let kind = verdict_kind(b, &outcome)?;
        match &mut verdict {
            None => {
                verdict = Some(StatisticsVerdict {
                    kind,
                    diagnostic: VerdictDiagnostic {
                        net_rotation: outcome.net_rotation,
                        min_separation: outcome.min_separation,
                        accumulated_phase: wrap_angle(outcome.theta),
                        samples: samples.len(),
                    },
                })
            }
            Some(v) => {
                if !same_kind(&v.kind, &kind, tol.snap) {
                    return Err(Error::inconsistent(format!(
                        "sample {k} gives {kind:?}, earlier samples gave {:?}",
                        v.kind
                    )));
                }
                v.diagnostic.min_separation = v.diagnostic.min_separation.min(outcome.min_separation);
            }
        }
    }
    Ok(verdict.expect("nonempty samples"))
}

/// TypeII exchange of two particles at rest with spins `spins` at positions
/// `x`, after transforming the whole configuration and the exchange
/// generators by Λ.
pub fn adjoint_exchange_massive(
    b: &BundleId,
    lambda: &SL2CElement,
    x: [Vector3<f64>; 2],
    spins: [Spinor2; 2],
    tol: &Tolerances,
) -> Result<ExchangeOutcome> {
    let BundleId::Dirac { n, m } = *b else {
        return Err(Error::domain("adjoint exchange needs a Dirac bundle"));
    };
    lambda.validate(tol.alg.max(1e-9))?;
    let rest = |xi: &Spinor2| {
        let h = xi.scale(C64::from(FRAC_1_SQRT_2));
        DiracSpinor::from_blocks(&h, &h)
    };
    let xi1 = BundlePoint::dirac(n, m, x[0], rest(&spins[0]), tol.norm)?;
    let xi2 = BundlePoint::dirac(n, m, x[1], rest(&spins[1]), tol.norm)?;
    let opts = ExchangeOptions { samples: tol.diag_grid, tol: tol.geom, ..ExchangeOptions::default() };
    let path = build_pair_exchange(&xi1.project()?, &xi2.project()?, Mode::TypeII, &opts)?.conjugated(lambda)?;
    let g = GroupElement::Sl2c { alpha: *lambda, translation: nalgebra::Vector4::zeros() };
    let start = PairClass::new(lifted_group_action(b, &g, &xi1)?, lifted_group_action(b, &g, &xi2)?)?;
    exchange_phase(b, &path, &start, tol)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::{admissible_pair, build_exchange};
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample(space: PhaseSpaceId, count: usize, seed: u64) -> Vec<(PhasePoint, PhasePoint)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| admissible_pair(&mut rng, space).unwrap()).collect()
    }

    use crate::phasespaces::PhaseSpaceId;

    #[test]
    fn hopf_sign_follows_n() {
        let tol = Tolerances::default();
        for n in 0..=4u32 {
            let b = BundleId::Hopf { n };
            for (p1, p2) in sample(b.base(), 3, u64::from(n)) {
                let path = build_exchange(&p1, &p2, Mode::TypeII, 0).unwrap();
                let o = exchange_phase(&b, &path, &start_class(&b, &p1, &p2, 1e-9).unwrap(), &tol).unwrap();
                let expected = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(o.phase, C64::new(expected, 0.0), "n = {n}");
                assert!(o.snap_distance < 1e-9);
            }
        }
    }

    #[test]
    fn type_one_rejected() {
        let b = BundleId::Hopf { n: 1 };
        let (p1, p2) = sample(b.base(), 1, 9).remove(0);
        let path = build_exchange(&p1, &p2, Mode::TypeI, 0).unwrap();
        let err = exchange_phase(&b, &path, &start_class(&b, &p1, &p2, 1e-9).unwrap(), &Tolerances::default());
        assert!(matches!(err, Err(Error::DiagonalCrossing { .. })));
    }

    #[test]
    fn verdicts() {
        let tol = Tolerances::default();
        let cases = [
            (BundleId::Hopf { n: 3 }, VerdictKind::SpinStatistics { f: 1 }),
            (BundleId::Dirac { n: 1, m: 1.2 }, VerdictKind::SpinStatistics { f: 1 }),
            (BundleId::Dirac { n: 2, m: 0.8 }, VerdictKind::SpinStatistics { f: 0 }),
            (BundleId::TrivialU1 { base: PhaseSpaceId::FreeRel { m: 1.0 } }, VerdictKind::BoseOnly),
            (BundleId::TrivialU1 { base: PhaseSpaceId::ThreeD { m: 1.0, s: 0.3 } }, VerdictKind::BoseOnly),
        ];
        for (b, expected) in cases {
            let v = classify_statistics(&b, &sample(b.base(), 4, 5), &tol).unwrap();
            assert_eq!(v.kind, expected, "{}", b.name());
            assert_relative_eq!(v.diagnostic.net_rotation, std::f64::consts::TAU, epsilon = 1e-12);
        }
    }

    #[test]
    fn anyon_selects_first_character() {
        let tol = Tolerances::default();
        for alpha in [PI / 3.0, 1.0, PI] {
            let b = BundleId::Anyon { alpha };
            let v = classify_statistics(&b, &sample(b.base(), 4, 11), &tol).unwrap();
            let VerdictKind::Anyonic { f, l, phase } = v.kind else { panic!("{:?}", v.kind) };
            assert_eq!((f, l), (0, 1));
            assert!((phase - C64::from_polar(1.0, alpha)).norm() < 1e-12);
        }
    }

    #[test]
    fn anyon_phase_sets() {
        assert_eq!(anyon_exchange_phases(PI / 3.0).len(), 4);
        assert_eq!(anyon_exchange_phases(0.0).len(), 2);
        assert_eq!(anyon_exchange_phases(PI).len(), 2);
    }

    #[test]
    fn adjoint_exchange_is_frame_independent() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let x = [Vector3::new(0.3, -0.2, 1.0), Vector3::new(-1.1, 0.4, 0.2)];
        let spins = [Spinor2::from_bloch(&Vector3::new(0.0, 0.6, 0.8)).unwrap(), Spinor2::from_bloch(&Vector3::x()).unwrap()];
        for n in [1u32, 2] {
            let b = BundleId::Dirac { n, m: 1.0 };
            let expected = if n == 1 { -1.0 } else { 1.0 };
            let z = SL2CElement::boost(&Vector3::z(), 1.0).unwrap();
            for lambda in [SL2CElement::identity(), z, crate::sampling::sl2c(&mut rng, 1.5)] {
                let o = adjoint_exchange_massive(&b, &lambda, x, spins, &tol).unwrap();
                assert_eq!(o.phase, C64::new(expected, 0.0));
                assert!(o.snap_distance < 1e-9, "{}", o.snap_distance);
                assert!(o.translation_term.abs() < 1e-9);
            }
        }
    }
}
