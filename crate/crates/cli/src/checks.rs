//! The check registry and the checks themselves.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix3, Matrix4, Vector3};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use spinstat::algebra::{sl2c_to_lorentz, su2_to_so3, SL2CElement, SU2Element, C64};
use spinstat::exchange::{
    adjoint_exchange_massive, admissible_pair, anyon_exchange_phases, build_pair_exchange, classify_statistics,
    diagonal_crossing, exchange_phase, reference_lift, start_class, ExchangeOptions, Mode, VerdictKind,
};
use spinstat::holonomy::{cap_flux, circle_path, integrality_check, loop_holonomy};
use spinstat::phasespaces::{closedness_check, null_directions_massless, symplectic_eval, PhasePoint, PhaseSpaceId};
use spinstat::prequant::{curvature_matches_symplectic, lifted_group_action, BundleId, GroupElement};
use spinstat::{sampling, Tolerances};

use crate::scenario::Scenario;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Integrality,
    Curvature,
    HolonomyStokes,
    Exchange,
    Classify,
    AnyonPhases,
    MasslessNull,
    Closedness,
    RotationPhase,
    LorentzInvariance,
    DoubleCover,
}

/// What a check needs from its scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Needs {
    Nothing,
    Space,
    Bundle,
}

/// Registry entry for a check.
#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub kind: CheckKind,
    pub needs: Needs,
    pub randomized: bool,
    /// Number of random samples (points, pairs, loops or frames).
    pub default_samples: usize,
    /// Pass threshold on the check's worst-case measurement, if it has one.
    pub default_threshold: Option<f64>,
    pub summary: &'static str,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::Integrality,
        CheckKind::Curvature,
        CheckKind::HolonomyStokes,
        CheckKind::Exchange,
        CheckKind::Classify,
        CheckKind::AnyonPhases,
        CheckKind::MasslessNull,
        CheckKind::Closedness,
        CheckKind::RotationPhase,
        CheckKind::LorentzInvariance,
        CheckKind::DoubleCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Integrality => "integrality",
            CheckKind::Curvature => "curvature",
            CheckKind::HolonomyStokes => "holonomy-stokes",
            CheckKind::Exchange => "exchange",
            CheckKind::Classify => "classify",
            CheckKind::AnyonPhases => "anyon-phases",
            CheckKind::MasslessNull => "massless-null",
            CheckKind::Closedness => "closedness",
            CheckKind::RotationPhase => "rotation-phase",
            CheckKind::LorentzInvariance => "lorentz-invariance",
            CheckKind::DoubleCover => "double-cover",
        }
    }

    /// RNG stream for this check; fixed per kind so that reordering the
    /// check list does not change any result.
    pub fn stream(self) -> u64 {
        self as u64
    }

    pub fn info(self) -> CheckInfo {
        let (needs, randomized, default_samples, default_threshold, summary) = match self {
            CheckKind::Integrality => {
                (Needs::Space, false, 0, None, "flux of the spin-sphere form is an integer multiple of 2π")
            }
            CheckKind::Curvature => (Needs::Bundle, true, 100, Some(1e-5), "dω equals the pulled-back symplectic form"),
            CheckKind::HolonomyStokes => {
                (Needs::Bundle, true, 20, Some(1e-4), "loop holonomy on Hopf_n equals exp(i · enclosed flux)")
            }
            CheckKind::Exchange => (
                Needs::Bundle,
                true,
                10,
                Some(1e-9),
                "TypeII exchange phase matches the predicted value; TypeI exchanges meet the diagonal",
            ),
            CheckKind::Classify => {
                (Needs::Bundle, true, 10, None, "statistics verdict over sample pairs matches the predicted one")
            }
            CheckKind::AnyonPhases => (
                Needs::Bundle,
                true,
                10,
                Some(1e-12),
                "anyon phase set size, selected character (f, l) = (0, 1) and e^{2iθ} = e^{2iα}",
            ),
            CheckKind::MasslessNull => {
                (Needs::Space, true, 50, Some(1e-8), "Ω(V(a), w) vanishes on the massless null directions")
            }
            CheckKind::Closedness => (Needs::Space, true, 20, Some(1e-6), "finite-difference dΩ vanishes"),
            CheckKind::RotationPhase => {
                (Needs::Bundle, true, 10, Some(1e-9), "lifted 2π rotation acts on the fiber by (−1)^n")
            }
            CheckKind::LorentzInvariance => (
                Needs::Bundle,
                true,
                10,
                Some(1e-9),
                "Dirac exchange phase is unchanged by conjugating with random Lorentz frames",
            ),
            CheckKind::DoubleCover => (
                Needs::Nothing,
                true,
                100,
                Some(1e-9),
                "SU(2) → SO(3) and SL(2,C) → SO(3,1) are homomorphisms with kernel {±1}",
            ),
        };
        CheckInfo { kind: self, needs, randomized, default_samples, default_threshold, summary }
    }
}

/// Result of a check that ran to completion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub measured: Map<String, Value>,
    pub expected: Map<String, Value>,
    pub detail: String,
}

/// Per-check inputs resolved from the scenario.
pub struct Context<'a> {
    pub scenario: &'a Scenario,
    pub tol: Tolerances,
    pub samples: usize,
    pub threshold: Option<f64>,
    pub rng: ChaCha8Rng,
}

type CheckResult = Result<Outcome, String>;

fn err(e: spinstat::Error) -> String {
    e.to_string()
}

fn map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("check values are JSON objects"),
    }
}

fn outcome(passed: bool, measured: Value, expected: Value, detail: String) -> CheckResult {
    Ok(Outcome { passed, measured: map(measured), expected: map(expected), detail })
}

/// Rounds a measurement to 6 significant digits so reports do not depend on
/// the last bits of floating-point reductions.
fn sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

impl Context<'_> {
    fn bundle(&self) -> Result<BundleId, String> {
        self.scenario.bundle.ok_or_else(|| "this check needs a `bundle`".to_string())
    }

    fn space(&self) -> Result<PhaseSpaceId, String> {
        self.scenario.base_space().ok_or_else(|| "this check needs a `space` or `bundle`".to_string())
    }

    fn threshold(&self) -> f64 {
        self.threshold.expect("registry gives this check a threshold")
    }

    fn pairs(&mut self, space: PhaseSpaceId) -> Result<Vec<(PhasePoint, PhasePoint)>, String> {
        (0..self.samples).map(|_| admissible_pair(&mut self.rng, space).map_err(err)).collect()
    }
}

pub fn run_check(kind: CheckKind, cx: &mut Context<'_>) -> CheckResult {
    match kind {
        CheckKind::Integrality => integrality(cx),
        CheckKind::Curvature => curvature(cx),
        CheckKind::HolonomyStokes => holonomy_stokes(cx),
        CheckKind::Exchange => exchange(cx),
        CheckKind::Classify => classify(cx),
        CheckKind::AnyonPhases => anyon_phases(cx),
        CheckKind::MasslessNull => massless_null(cx),
        CheckKind::Closedness => closedness(cx),
        CheckKind::RotationPhase => rotation_phase(cx),
        CheckKind::LorentzInvariance => lorentz_invariance(cx),
        CheckKind::DoubleCover => double_cover(cx),
    }
}

fn spin_of(cx: &Context<'_>) -> Result<f64, String> {
    match (cx.scenario.bundle, cx.space()?) {
        (Some(BundleId::Hopf { n }), _) => Ok(f64::from(n) / 2.0),
        (_, PhaseSpaceId::SpinSphere { s }) => Ok(s),
        (_, other) => Err(format!("integrality needs a spin sphere, got {}", other.name())),
    }
}

fn integrality(cx: &mut Context<'_>) -> CheckResult {
    let s = spin_of(cx)?;
    let r = integrality_check(s, cx.tol.mesh_depth, cx.tol.int).map_err(err)?;
    let want = cx.scenario.expect.quantizable.unwrap_or(true);
    let detail = match r.n {
        Some(n) => format!("flux/2π = {:.6}, n = {n}", r.flux_over_2pi),
        None => format!("flux/2π = {:.6} is not an integer", r.flux_over_2pi),
    };
    outcome(
        r.quantizable == want,
        json!({ "flux_over_2pi": sig(r.flux_over_2pi), "n": r.n, "quantizable": r.quantizable }),
        json!({ "quantizable": want, "integer_tolerance": cx.tol.int, "mesh_depth": cx.tol.mesh_depth }),
        detail,
    )
}

fn curvature(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    let mut worst = 0.0f64;
    for _ in 0..cx.samples {
        let p = sampling::point(&mut cx.rng, b.base()).map_err(err)?;
        let xi = reference_lift(&b, &p, cx.tol.norm).map_err(err)?.shift_phase(cx.rng.random_range(0.0..TAU));
        let u = sampling::tangent(&mut cx.rng, &p).map_err(err)?;
        let v = sampling::tangent(&mut cx.rng, &p).map_err(err)?;
        let (d_omega, omega) = curvature_matches_symplectic(&b, &xi, &u, &v, cx.tol.fd_step).map_err(err)?;
        worst = worst.max((d_omega - omega).abs());
    }
    let limit = cx.threshold();
    outcome(
        worst < limit,
        json!({ "max_defect": sig(worst), "points": cx.samples }),
        json!({ "max_defect_below": limit }),
        format!("worst |dω − Ω| = {worst:.2e} over {} points", cx.samples),
    )
}

fn holonomy_stokes(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    let BundleId::Hopf { n } = b else {
        return Err("holonomy-stokes runs on Hopf bundles".into());
    };
    let s = f64::from(n) / 2.0;
    let mut worst = 0.0f64;
    for _ in 0..cx.samples {
        let axis = sampling::unit_vector3(&mut cx.rng);
        let radius = cx.rng.random_range(0.1..3.0);
        let path = circle_path(s, &axis, radius, cx.tol.path_samples).map_err(err)?;
        let xi = reference_lift(&b, &path.points[0], cx.tol.norm).map_err(err)?;
        let h = loop_holonomy(&b, &path, &xi).map_err(err)?;
        let f = cap_flux(s, &axis, radius, cx.tol.mesh_depth).map_err(err)?;
        worst = worst.max((h.phase() - C64::from_polar(1.0, f.total)).norm());
    }
    let limit = cx.threshold();
    outcome(
        worst < limit,
        json!({ "max_deviation": sig(worst), "loops": cx.samples }),
        json!({ "max_deviation_below": limit }),
        format!("worst |hol − e^{{iF}}| = {worst:.2e} over {} loops", cx.samples),
    )
}

/// The exchange phase the theory predicts for a bundle.
fn predicted_phase(b: &BundleId) -> C64 {
    match *b {
        BundleId::Hopf { n } | BundleId::Dirac { n, .. } => C64::new(if n % 2 == 0 { 1.0 } else { -1.0 }, 0.0),
        BundleId::TrivialU1 { .. } => C64::new(1.0, 0.0),
        BundleId::Anyon { alpha } => C64::from_polar(1.0, alpha),
    }
}

fn complex(z: C64) -> Value {
    json!([sig(z.re), sig(z.im)])
}

fn exchange(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    let pairs = cx.pairs(b.base())?;
    let expected = predicted_phase(&b);
    let opts = ExchangeOptions { samples: cx.tol.diag_grid, tol: cx.tol.geom, ..ExchangeOptions::default() };
    let mut worst = 0.0f64;
    let mut crossed = 0usize;
    for (p1, p2) in &pairs {
        let path = build_pair_exchange(p1, p2, Mode::TypeII, &opts).map_err(err)?;
        let start = start_class(&b, p1, p2, cx.tol.norm).map_err(err)?;
        let o = exchange_phase(&b, &path, &start, &cx.tol).map_err(err)?;
        worst = worst.max((C64::from_polar(1.0, o.theta) - expected).norm());
        let type_one = build_pair_exchange(p1, p2, Mode::TypeI, &opts).map_err(err)?;
        crossed += usize::from(diagonal_crossing(&type_one, cx.tol.diag).crossed);
    }
    let limit = cx.threshold();
    outcome(
        worst < limit && crossed == pairs.len(),
        json!({ "max_phase_deviation": sig(worst), "pairs": pairs.len(), "type_one_crossed": crossed }),
        json!({ "phase": complex(expected), "max_phase_deviation_below": limit, "type_one_crossed": pairs.len() }),
        format!("{} pairs, worst |e^{{iθ}} − ({expected:.3})| = {worst:.2e}, {crossed} TypeI crossed", pairs.len()),
    )
}

fn verdict_value(kind: &VerdictKind) -> Value {
    match *kind {
        VerdictKind::BoseOnly => json!({ "kind": "bose_only", "f": 0 }),
        VerdictKind::SpinStatistics { f } => json!({ "kind": "spin_statistics", "f": f }),
        VerdictKind::Anyonic { f, l, phase } => json!({ "kind": "anyonic", "f": f, "l": l, "phase": complex(phase) }),
    }
}

fn predicted_verdict(b: &BundleId, f_override: Option<u8>) -> VerdictKind {
    match *b {
        BundleId::Hopf { n } | BundleId::Dirac { n, .. } => {
            VerdictKind::SpinStatistics { f: f_override.unwrap_or((n % 2) as u8) }
        }
        BundleId::TrivialU1 { .. } => VerdictKind::BoseOnly,
        BundleId::Anyon { alpha } => VerdictKind::Anyonic { f: 0, l: 1, phase: C64::from_polar(1.0, alpha) },
    }
}

fn same_verdict(a: &VerdictKind, b: &VerdictKind, tol: f64) -> bool {
    match (a, b) {
        (VerdictKind::Anyonic { f, l, phase }, VerdictKind::Anyonic { f: g, l: m, phase: q }) => {
            f == g && l == m && (phase - q).norm() <= tol
        }
        _ => a == b,
    }
}

fn classify(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    let pairs = cx.pairs(b.base())?;
    let v = classify_statistics(&b, &pairs, &cx.tol).map_err(err)?;
    let want = predicted_verdict(&b, cx.scenario.expect.f);
    let f = match v.kind {
        VerdictKind::BoseOnly => 0,
        VerdictKind::SpinStatistics { f } | VerdictKind::Anyonic { f, .. } => f,
    };
    let measured = json!({
        "verdict": verdict_value(&v.kind),
        "f": f,
        "net_rotation": sig(v.diagnostic.net_rotation),
        "min_separation": sig(v.diagnostic.min_separation),
        "accumulated_phase": sig(v.diagnostic.accumulated_phase),
        "pairs": v.diagnostic.samples,
    });
    outcome(
        same_verdict(&v.kind, &want, cx.tol.snap),
        measured,
        json!({ "verdict": verdict_value(&want) }),
        format!("{:?} over {} pairs", v.kind, pairs.len()),
    )
}

fn anyon_phases(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    let BundleId::Anyon { alpha } = b else {
        return Err("anyon-phases runs on the anyon bundle".into());
    };
    let cardinality = anyon_exchange_phases(alpha).len();
    let multiple_of_pi = {
        let r = (alpha / PI).round();
        (alpha - r * PI).abs() < 1e-9
    };
    let want_cardinality = if multiple_of_pi { 2 } else { 4 };
    let pairs = cx.pairs(b.base())?;
    let v = classify_statistics(&b, &pairs, &cx.tol).map_err(err)?;
    let VerdictKind::Anyonic { f, l, phase } = v.kind else {
        return Err(format!("anyon bundle produced verdict {:?}", v.kind));
    };
    let e_ia = C64::from_polar(1.0, alpha);
    let double = (phase * phase - e_ia * e_ia).norm();
    let selected = (phase - e_ia).norm();
    let limit = cx.threshold();
    let passed = cardinality == want_cardinality && (f, l) == (0, 1) && selected < limit && double < limit;
    outcome(
        passed,
        json!({
            "cardinality": cardinality,
            "f": f,
            "l": l,
            "phase": complex(phase),
            "double_exchange_deviation": sig(double),
        }),
        json!({ "cardinality": want_cardinality, "f": 0, "l": 1, "phase": complex(e_ia), "deviation_below": limit }),
        format!("|phases| = {cardinality}, (f, l) = ({f}, {l}), phase {phase:.6}"),
    )
}

fn massless_null(cx: &mut Context<'_>) -> CheckResult {
    let space = cx.space()?;
    if !matches!(space, PhaseSpaceId::Massless { .. }) {
        return Err(format!("massless-null needs the massless space, got {}", space.name()));
    }
    let mut worst = 0.0f64;
    for _ in 0..cx.samples {
        let p = sampling::point(&mut cx.rng, space).map_err(err)?;
        let a = sampling::orthogonal_to(&mut cx.rng, &p.momentum());
        let v = null_directions_massless(&p, &a).map_err(err)?;
        let w = sampling::tangent(&mut cx.rng, &p).map_err(err)?;
        worst = worst.max(symplectic_eval(&p, &v, &w).map_err(err)?.abs());
    }
    let limit = cx.threshold();
    outcome(
        worst < limit,
        json!({ "max_pairing": sig(worst), "pairs": cx.samples }),
        json!({ "max_pairing_below": limit }),
        format!("worst |Ω(V(a), w)| = {worst:.2e} over {} pairs", cx.samples),
    )
}

fn closedness(cx: &mut Context<'_>) -> CheckResult {
    let space = cx.space()?;
    let mut worst = 0.0f64;
    for _ in 0..cx.samples {
        let p = sampling::point(&mut cx.rng, space).map_err(err)?;
        let t: Vec<_> = (0..3).map(|_| sampling::tangent(&mut cx.rng, &p)).collect::<Result<_, _>>().map_err(err)?;
        let d = closedness_check(space, &p, &t[0], &t[1], &t[2], cx.tol.fd_step).map_err(err)?;
        worst = worst.max(d.abs());
    }
    let limit = cx.threshold();
    outcome(
        worst < limit,
        json!({ "max_d_omega": sig(worst), "points": cx.samples }),
        json!({ "max_d_omega_below": limit }),
        format!("worst |dΩ| = {worst:.2e} over {} points", cx.samples),
    )
}

fn rotation_phase(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    let n = match b {
        BundleId::Hopf { n } | BundleId::Dirac { n, .. } => n,
        _ => return Err("rotation-phase runs on Hopf and Dirac bundles".into()),
    };
    let expected = predicted_phase(&b);
    let mut worst = 0.0f64;
    for _ in 0..cx.samples {
        let axis = sampling::unit_vector3(&mut cx.rng);
        let g = GroupElement::Su2 { alpha: SU2Element::rotation(&axis, TAU).map_err(err)? };
        let p = sampling::point(&mut cx.rng, b.base()).map_err(err)?;
        let xi = reference_lift(&b, &p, cx.tol.norm).map_err(err)?.shift_phase(cx.rng.random_range(0.0..TAU));
        let moved = lifted_group_action(&b, &g, &xi).map_err(err)?;
        let phase = C64::from_polar(1.0, f64::from(n) * xi.phase_offset(&moved, cx.tol.norm).map_err(err)?);
        worst = worst.max((phase - expected).norm());
    }
    let limit = cx.threshold();
    outcome(
        worst < limit,
        json!({ "max_deviation": sig(worst), "points": cx.samples }),
        json!({ "phase": complex(expected), "max_deviation_below": limit }),
        format!("worst |phase − ({:+.0})| = {worst:.2e}", expected.re),
    )
}

fn lorentz_invariance(cx: &mut Context<'_>) -> CheckResult {
    let b = cx.bundle()?;
    if !matches!(b, BundleId::Dirac { .. }) {
        return Err("lorentz-invariance runs on Dirac bundles".into());
    }
    let expected = predicted_phase(&b);
    let x = loop {
        let a = Vector3::from_fn(|_, _| cx.rng.random_range(-1.5..1.5));
        let c = Vector3::from_fn(|_, _| cx.rng.random_range(-1.5..1.5));
        if (a - c).norm() > 0.5 {
            break [a, c];
        }
    };
    let spins = loop {
        let (s1, s2) = (sampling::spinor(&mut cx.rng), sampling::spinor(&mut cx.rng));
        let (n1, n2) = (s1.bloch(), s2.bloch());
        if (n1 - n2).norm() > 0.1 && (n1 + n2).norm() > 0.1 {
            break [s1, s2];
        }
    };
    let mut worst = 0.0f64;
    for _ in 0..cx.samples {
        let lambda = sampling::sl2c(&mut cx.rng, 2.0);
        let o = adjoint_exchange_massive(&b, &lambda, x, spins, &cx.tol).map_err(err)?;
        worst = worst.max((C64::from_polar(1.0, o.theta) - expected).norm());
    }
    let limit = cx.threshold();
    outcome(
        worst < limit,
        json!({ "max_deviation": sig(worst), "frames": cx.samples }),
        json!({ "phase": complex(expected), "max_deviation_below": limit }),
        format!("{} frames, worst |e^{{iθ}} − ({:+.0})| = {worst:.2e}", cx.samples, expected.re),
    )
}

fn double_cover(cx: &mut Context<'_>) -> CheckResult {
    let mut su2_worst = 0.0f64;
    let mut sl2c_worst = 0.0f64;
    for _ in 0..cx.samples {
        let (a, b) = (sampling::su2(&mut cx.rng), sampling::su2(&mut cx.rng));
        let r = |q: &SU2Element| su2_to_so3(q, 1e-9).map(|o| o.m).map_err(err);
        su2_worst = su2_worst.max((r(&(a * b))? - r(&a)? * r(&b)?).abs().max());
        su2_worst = su2_worst.max((r(&a.neg())? - r(&a)?).abs().max());

        let (a, b) = (sampling::sl2c(&mut cx.rng, 1.5), sampling::sl2c(&mut cx.rng, 1.5));
        let l = |q: &SL2CElement| sl2c_to_lorentz(q, 1e-9).map(|o| o.m).map_err(err);
        let lhs = l(&(a * b))?;
        let scale = 1.0 + lhs.abs().max();
        sl2c_worst = sl2c_worst.max((lhs - l(&a)? * l(&b)?).abs().max() / scale);
        sl2c_worst = sl2c_worst.max((l(&a.neg())? - l(&a)?).abs().max() / scale);
    }
    // The kernel: among rotations about a fixed axis only 0 and 2π map to
    // the identity, and −1 maps to the identity in both covers.
    let mut kernel_ok = true;
    for k in 0..64u32 {
        let q = SU2Element::rotation(&Vector3::z(), TAU * f64::from(k) / 32.0).map_err(err)?;
        let trivial = (su2_to_so3(&q, 1e-9).map_err(err)?.m - Matrix3::identity()).abs().max() < 1e-9;
        kernel_ok &= trivial == (k % 32 == 0);
    }
    let minus = SL2CElement::identity().neg();
    kernel_ok &= (sl2c_to_lorentz(&minus, 1e-9).map_err(err)?.m - Matrix4::identity()).abs().max() < 1e-15;
    let limit = cx.threshold();
    outcome(
        su2_worst < limit && sl2c_worst < limit && kernel_ok,
        json!({
            "su2_defect": sig(su2_worst),
            "sl2c_defect": sig(sl2c_worst),
            "kernel_is_plus_minus_one": kernel_ok,
            "pairs": cx.samples,
        }),
        json!({ "defect_below": limit, "kernel_is_plus_minus_one": true }),
        format!("homomorphism defects {su2_worst:.2e} (SU(2)), {sl2c_worst:.2e} (SL(2,C))"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_through_serde() {
        for kind in CheckKind::ALL {
            let text = serde_json::to_string(&kind).unwrap();
            assert_eq!(text, format!("\"{}\"", kind.name()));
            assert_eq!(serde_json::from_str::<CheckKind>(&text).unwrap(), kind);
        }
    }

    #[test]
    fn streams_are_distinct() {
        let mut s: Vec<u64> = CheckKind::ALL.iter().map(|k| k.stream()).collect();
        s.dedup();
        assert_eq!(s.len(), CheckKind::ALL.len());
    }

    #[test]
    fn sig_keeps_six_digits() {
        assert_eq!(sig(1.234567891), 1.23457);
        assert_eq!(sig(0.0), 0.0);
        assert_eq!(sig(-2.5e-12), -2.5e-12);
    }
}
