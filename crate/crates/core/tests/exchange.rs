use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::{Vector2, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinstat::algebra::{SL2CElement, SU2Element, Spinor2, C64};
use spinstat::exchange::{
    adjoint_exchange_massive, admissible_pair, admissible_phases, anyon_exchange_phases, build_exchange,
    build_pair_exchange, classify_statistics, common_circle, common_circle_about, diagonal_crossing, exchange_phase,
    start_class, ExchangeOptions, Mode, VerdictKind,
};
use spinstat::phasespaces::{PhasePoint, PhaseSpaceId};
use spinstat::prequant::{BundleId, GroupElement};
use spinstat::{Error, Tolerances};

fn pairs(space: PhaseSpaceId, count: usize, seed: u64) -> Vec<(PhasePoint, PhasePoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| admissible_pair(&mut rng, space).unwrap()).collect()
}

fn sphere(s: f64, v: Vector3<f64>) -> PhasePoint {
    PhasePoint::spin_sphere(s, v, 1e-9).unwrap()
}

#[test]
fn circle_examples() {
    let (a, b) = (sphere(0.5, Vector3::x()), sphere(0.5, Vector3::y()));
    let c = common_circle_about(&a, &b, &Vector3::z(), 1e-9).unwrap();
    assert!((c.gamma - FRAC_PI_2).abs() < 1e-12);
    assert!((c.gamma_prime - 3.0 * FRAC_PI_2).abs() < 1e-12);
    assert!((c.gamma + c.gamma_prime - TAU).abs() < 1e-12);

    let d = common_circle(&a, &b, 1e-9).unwrap();
    assert_eq!((d.gamma, d.gamma_prime), (PI, PI));
    assert!((d.axis - Vector3::new(1.0, 1.0, 0.0).normalize()).norm() < 1e-12);

    let south = sphere(0.5, -Vector3::x());
    assert!(matches!(common_circle(&a, &south, 1e-9), Err(Error::AmbiguousAxis(_))));
    let c = common_circle_about(&a, &south, &Vector3::z(), 1e-9).unwrap();
    assert!((c.gamma - PI).abs() < 1e-12);
    assert!(matches!(common_circle(&a, &a, 1e-9), Err(Error::Degenerate(_))));
    assert!(common_circle_about(&a, &sphere(0.5, Vector3::new(0.0, 0.6, 0.8)), &Vector3::z(), 1e-9).is_err());
}

#[test]
fn type_two_nets_an_odd_number_of_turns() {
    for (p1, p2) in pairs(PhaseSpaceId::SpinSphere { s: 0.5 }, 4, 61) {
        for k in 0..4u32 {
            let path = build_exchange(&p1, &p2, Mode::TypeII, k).unwrap();
            let expected = TAU * f64::from(2 * k + 1);
            assert!((path.net_rotation() - expected).abs() < 1e-12);
            assert!(path.endpoint_defect().unwrap() < 1e-9);
            // g2·g1 is a rotation by an odd multiple of 2π, so −1 in SU(2).
            let lift = |leg| match path.element(leg, 1.0).unwrap() {
                GroupElement::Su2 { alpha } => alpha,
                other => panic!("{other:?}"),
            };
            assert!((lift(1) * lift(0)).distance(&SU2Element::MINUS_ONE) < 1e-9, "k = {k}");
            assert!(!diagonal_crossing(&path, 1e-6).crossed);
        }
    }
}

#[test]
fn type_one_meets_the_diagonal() {
    let tol = Tolerances::default();
    for (p1, p2) in pairs(PhaseSpaceId::SpinSphere { s: 1.0 }, 3, 62) {
        let path = build_exchange(&p1, &p2, Mode::TypeI, 0).unwrap();
        let c = diagonal_crossing(&path, tol.geom);
        assert!(c.crossed && (c.t_min - 0.5).abs() < 1e-3, "{c:?}");
        let b = BundleId::Hopf { n: 2 };
        let err = exchange_phase(&b, &path, &start_class(&b, &p1, &p2, 1e-9).unwrap(), &tol);
        assert!(matches!(err, Err(Error::DiagonalCrossing { .. })));

        let unequal = ExchangeOptions { turns: [0, 1], ..ExchangeOptions::default() };
        let path = build_pair_exchange(&p1, &p2, Mode::TypeII, &unequal).unwrap();
        assert!(diagonal_crossing(&path, tol.geom).crossed);
    }
}

/// e^{iθ} read directly from the spinors: g1ξ1 = u1 ξ2 and g2ξ2 = u2 ξ1 up
/// to the fiber, and the Hopf_n fiber acts by the n-th power.
fn spinor_oracle(n: u32, p1: &PhasePoint, p2: &PhasePoint, k: u32) -> C64 {
    let (a, b) = (p1.sphere_point().normalize(), p2.sphere_point().normalize());
    let axis = (a + b).normalize();
    let xi1 = Spinor2::from_bloch(&a).unwrap();
    let xi2 = Spinor2::from_bloch(&b).unwrap();
    let g = SU2Element::rotation(&axis, PI + TAU * f64::from(k)).unwrap();
    let u1 = xi2.inner(&g.act(&xi1));
    let u2 = xi1.inner(&g.act(&xi2));
    assert!((u1.norm() - 1.0).abs() < 1e-9 && (u2.norm() - 1.0).abs() < 1e-9);
    (u1 * u2).powu(n)
}

#[test]
fn hopf_phases_match_spinor_oracle() {
    let tol = Tolerances::default();
    for n in 0..=5u32 {
        let b = BundleId::Hopf { n };
        for (p1, p2) in pairs(b.base(), 3, 63 + u64::from(n)) {
            for k in [0u32, 2] {
                let path = build_exchange(&p1, &p2, Mode::TypeII, k).unwrap();
                let o = exchange_phase(&b, &path, &start_class(&b, &p1, &p2, 1e-9).unwrap(), &tol).unwrap();
                let oracle = spinor_oracle(n, &p1, &p2, k);
                assert!((o.phase - oracle).norm() < 1e-9, "n = {n}, k = {k}: {} vs {oracle}", o.phase);
                assert!(o.class_residual < 1e-8 && o.lift_defect < 1e-8);
            }
        }
    }
}

#[test]
fn massive_and_spinless_phases() {
    let tol = Tolerances::default();
    let cases = [
        (BundleId::Dirac { n: 1, m: 1.0 }, -1.0),
        (BundleId::Dirac { n: 3, m: 0.4 }, -1.0),
        (BundleId::Dirac { n: 2, m: 2.0 }, 1.0),
        (BundleId::TrivialU1 { base: PhaseSpaceId::FreeRel { m: 1.3 } }, 1.0),
        (BundleId::TrivialU1 { base: PhaseSpaceId::ThreeD { m: 1.0, s: 0.25 } }, 1.0),
    ];
    for (b, expected) in cases {
        for (p1, p2) in pairs(b.base(), 3, 64) {
            for k in [0u32, 1] {
                let opts = ExchangeOptions { samples: 512, ..ExchangeOptions::extra_turns(k) };
                let path = build_pair_exchange(&p1, &p2, Mode::TypeII, &opts).unwrap();
                let o = exchange_phase(&b, &path, &start_class(&b, &p1, &p2, 1e-9).unwrap(), &tol).unwrap();
                assert_eq!(o.phase, C64::new(expected, 0.0), "{} k = {k}", b.name());
                assert!(o.snap_distance < 1e-8, "{}: {}", b.name(), o.snap_distance);
            }
        }
    }
}

#[test]
fn boosted_frames_agree() {
    let tol = Tolerances::default();
    let b = BundleId::Dirac { n: 1, m: 1.0 };
    let x = [Vector3::new(1.0, 0.0, 0.0), Vector3::new(-1.0, 0.5, 0.0)];
    let spins = [Spinor2::from_bloch(&Vector3::z()).unwrap(), Spinor2::from_bloch(&Vector3::y()).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(65);
    let mut frames = vec![SL2CElement::boost(&Vector3::z(), 1.0).unwrap()];
    for _ in 0..3 {
        let dir = spinstat::sampling::unit_vector3(&mut rng);
        frames.push(SL2CElement::boost(&dir, rng.random_range(0.1..2.0)).unwrap());
    }
    for lambda in frames {
        let o = adjoint_exchange_massive(&b, &lambda, x, spins, &tol).unwrap();
        assert_eq!(o.phase, C64::new(-1.0, 0.0));
        assert!(o.snap_distance < 1e-8);
    }
    let hopf = BundleId::Hopf { n: 1 };
    assert!(adjoint_exchange_massive(&hopf, &SL2CElement::identity(), x, spins, &tol).is_err());
}

#[test]
fn anyon_phases() {
    let tol = Tolerances::default();
    let quarter = anyon_exchange_phases(FRAC_PI_2);
    for z in [C64::new(1.0, 0.0), C64::new(-1.0, 0.0), C64::new(0.0, 1.0), C64::new(0.0, -1.0)] {
        assert!(quarter.iter().any(|w| (w - z).norm() < 1e-12), "{z}");
    }
    assert_eq!(anyon_exchange_phases(TAU).len(), 2);
    assert_eq!(admissible_phases(&BundleId::Hopf { n: 1 }).len(), 2);

    for alpha in [0.3, FRAC_PI_2, 2.0] {
        let b = BundleId::Anyon { alpha };
        let allowed = admissible_phases(&b);
        for (p1, p2) in pairs(b.base(), 3, 66) {
            for k in 0..3u32 {
                let path = build_pair_exchange(&p1, &p2, Mode::TypeII, &ExchangeOptions::extra_turns(k)).unwrap();
                let o = exchange_phase(&b, &path, &start_class(&b, &p1, &p2, 1e-9).unwrap(), &tol).unwrap();
                assert!(allowed.iter().any(|w| (w - o.phase).norm() < 1e-12));
                // Moving the rotated points back to the starting sheet
                // records each counterclockwise turn as winding −1.
                assert_eq!(o.winding, -(2 * i64::from(k) + 1));
                let squared = C64::from_polar(1.0, 2.0 * o.theta);
                assert!((squared - C64::from_polar(1.0, 2.0 * alpha)).norm() < 1e-9, "α = {alpha}, k = {k}");
            }
        }
        let v = classify_statistics(&b, &pairs(b.base(), 3, 67), &tol).unwrap();
        assert!(matches!(v.kind, VerdictKind::Anyonic { l: 1, .. }), "{:?}", v.kind);
    }
}

#[test]
fn anyon_pairs_need_matching_radii() {
    let space = PhaseSpaceId::Anyon { alpha: 1.0 };
    let p1 = PhasePoint::anyon(1.0, [0.0, 0.0], Vector2::new(0.2, 0.0), 1e-9).unwrap();
    let p2 = PhasePoint::anyon(1.0, [0.3, 0.2], Vector2::new(0.2, 0.0), 1e-9).unwrap();
    assert_eq!(p1.space, space);
    assert!(build_pair_exchange(&p1, &p2, Mode::TypeII, &ExchangeOptions::default()).is_err());
}

#[test]
fn verdicts_by_bundle() {
    let tol = Tolerances::default();
    for (b, expected) in [
        (BundleId::Hopf { n: 1 }, VerdictKind::SpinStatistics { f: 1 }),
        (BundleId::Hopf { n: 4 }, VerdictKind::SpinStatistics { f: 0 }),
        (BundleId::TrivialU1 { base: PhaseSpaceId::FreeRel { m: 0.5 } }, VerdictKind::BoseOnly),
    ] {
        let v = classify_statistics(&b, &pairs(b.base(), 5, 68), &tol).unwrap();
        assert_eq!(v.kind, expected);
        assert_eq!(v.diagnostic.samples, 5);
        assert!(v.diagnostic.min_separation > tol.geom);
    }
    let b = BundleId::Hopf { n: 1 };
    assert!(classify_statistics(&b, &[], &tol).is_err());
}

#[test]
fn massless_space_has_no_exchange() {
    let mut rng = ChaCha8Rng::seed_from_u64(69);
    let space = PhaseSpaceId::Massless { s: 0.5, chi: 1 };
    let p = spinstat::sampling::point(&mut rng, space).unwrap();
    let q = spinstat::sampling::point(&mut rng, space).unwrap();
    assert!(matches!(build_pair_exchange(&p, &q, Mode::TypeII, &ExchangeOptions::default()), Err(Error::Unsupported(_))));
}
