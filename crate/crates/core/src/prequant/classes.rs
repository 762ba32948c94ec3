use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::bundle::{BundlePoint, Representative};
use super::BundleId;
use crate::algebra::C64;
use crate::error::{Error, Result};
use crate::numerics::wrap_angle;

/// Components below this modulus are skipped when fixing the U(1) gauge.
const SIGNIFICANT: f64 = 1e-6;
/// Ties in the lexicographic Z_n reduction are resolved within this slack.
const LEX_SLACK: f64 = 1e-9;

/// Representative of a class [ξ1, ξ2] of the combined two-particle bundle:
/// pairs modulo (ξ1, ξ2) ~ (zξ1, z⁻¹ξ2) for z ∈ U(1) and the Z_n action on
/// each slot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairClass {
    pub first: BundlePoint,
    pub second: BundlePoint,
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > LEX_SLACK {
            return x.partial_cmp(y).unwrap_or(Ordering::Equal);
        }
    }
    Ordering::Equal
}

/// Complex components of a Hopf or Dirac representative.
fn spinor_components(p: &BundlePoint) -> Vec<C64> {
    match &p.rep {
        Representative::Hopf { xi } => vec![xi.z1, xi.z2],
        Representative::Dirac { psi, .. } => psi.c.to_vec(),
        _ => Vec::new(),
    }
}

/// Phase that makes the first significant component real positive.
fn gauge_angle(p: &BundlePoint) -> f64 {
    spinor_components(p)
        .iter()
        .find(|z| z.norm() > SIGNIFICANT)
        .map(|z| -z.arg())
        .unwrap_or(0.0)
}

fn spinor_key(p: &BundlePoint) -> Vec<f64> {
    spinor_components(p).iter().flat_map(|z| [z.re, z.im]).collect()
}

/// Lexicographically smallest member of the Z_n orbit of a Hopf or Dirac point.
fn zn_min(p: &BundlePoint, n: u32) -> BundlePoint {
    (0..n)
        .map(|r| p.shift_phase(TAU * f64::from(r) / f64::from(n)))
        .min_by(|a, b| lex_cmp(&spinor_key(a), &spinor_key(b)))
        .expect("n ≥ 1")
}

/// Canonical representative of the orbit {e^{2πir/n} ξ}.
pub fn znq_canonicalize(xi: &BundlePoint) -> Result<BundlePoint> {
    match xi.bundle.zn() {
        None => Err(Error::Unsupported(format!("{} has no Z_n quotient", xi.bundle.name()))),
        Some(0) => Err(Error::domain("Z_n canonicalization needs n ≥ 1")),
        Some(1) => Ok(xi.clone()),
        Some(n) => Ok(zn_min(xi, n)),
    }
}

/// Moves an anyon representative to the sheet with x1 + x2 ∈ [0, 2).
fn anyon_sheet(p: &BundlePoint) -> BundlePoint {
    let Representative::Anyon { point, phase, winding } = &p.rep else {
        return p.clone();
    };
    let k = (0.5 * (point.coords[0] + point.coords[1])).floor() as i64;
    let mut q = point.clone();
    q.coords[0] -= k as f64;
    q.coords[1] -= k as f64;
    BundlePoint { bundle: p.bundle, rep: Representative::Anyon { point: q, phase: *phase, winding: winding - k } }
}

impl PairClass {
    pub fn new(first: BundlePoint, second: BundlePoint) -> Result<Self> {
        if first.bundle != second.bundle {
            return Err(Error::domain("pair members belong to different bundles"));
        }
        Ok(Self { first, second })
    }

    pub fn bundle(&self) -> BundleId {
        self.first.bundle
    }

    /// The residual fiber action on classes, applied to the first slot's
    /// representative: [ξ1, ξ2] ↦ [e^{iθ}ξ1, ξ2].
    pub fn shift_first(&self, theta: f64) -> PairClass {
        PairClass { first: self.first.shift_phase(theta), second: self.second.clone() }
    }

    /// Class equality: canonical forms agree within `tol`.
    pub fn class_eq(&self, other: &PairClass, tol: f64) -> Result<bool> {
        Ok(self.class_distance(other)? <= tol)
    }

    /// Largest discrepancy between the canonical forms of two classes.
    pub fn class_distance(&self, other: &PairClass) -> Result<f64> {
        if self.bundle() != other.bundle() {
            return Err(Error::domain("classes belong to different bundles"));
        }
        let (a, b) = (pair_canonicalize(self)?, pair_canonicalize(other)?);
        let mut d = 0.0f64;
        for (x, y) in [(&a.first, &b.first), (&a.second, &b.second)] {
            match (&x.rep, &y.rep) {
                (Representative::Trivial { point: p, phase: f }, Representative::Trivial { point: q, phase: g }) => {
                    d = d.max(p.chart_distance(q)).max(wrap_angle(f - g).abs());
                }
                (Representative::Anyon { .. }, Representative::Anyon { .. }) => {
                    let BundleId::Anyon { alpha } = x.bundle else { unreachable!() };
                    match x.anyon_offset(y, f64::INFINITY) {
                        Ok((dphi, dw)) => {
                            let Representative::Anyon { point: p, .. } = &x.rep else { unreachable!() };
                            let Representative::Anyon { point: q, .. } = &y.rep else { unreachable!() };
                            let k = (q.coords[0] - p.coords[0]).round();
                            let shift: f64 = (0..4)
                                .map(|i| (q.coords[i] - p.coords[i] - if i < 2 { k } else { 0.0 }).abs())
                                .fold(0.0, f64::max);
                            d = d.max(shift).max(wrap_angle(dphi + dw as f64 * alpha).abs());
                        }
                        Err(_) => d = f64::INFINITY,
                    }
                }
                _ => {
                    let (kx, ky) = (x.to_real(), y.to_real());
                    d = d.max(kx.iter().zip(&ky).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max));
                }
            }
        }
        Ok(d)
    }
}

/// Canonical representative of [ξ1, ξ2] under the pair relations.
///
/// Hopf and Dirac: the U(1) relation makes the first significant component
/// of ξ1 real positive, then the Z_n action on ξ2 is reduced
/// lexicographically (the Z_n action on ξ1 is absorbed by the first step).
/// For n = 0 every phase is identified, so both slots are gauge-fixed.
/// Trivial and anyon bundles move the whole phase into the second slot.
pub fn pair_canonicalize(p: &PairClass) -> Result<PairClass> {
    if p.first.bundle != p.second.bundle {
        return Err(Error::domain("pair members belong to different bundles"));
    }
    let b = p.first.bundle;
    match b {
        BundleId::Hopf { n } | BundleId::Dirac { n, .. } => {
            let theta = gauge_angle(&p.first);
            let first = p.first.shift_phase(theta);
            let second = if n == 0 {
                p.second.shift_phase(gauge_angle(&p.second))
            } else {
                zn_min(&p.second.shift_phase(-theta), n)
            };
            Ok(PairClass { first, second })
        }
        BundleId::TrivialU1 { .. } => {
            let (Representative::Trivial { point: p1, phase: f1 }, Representative::Trivial { point: p2, phase: f2 }) =
                (&p.first.rep, &p.second.rep)
            else {
                return Err(Error::domain("representative does not match the bundle kind"));
            };
            Ok(PairClass {
                first: BundlePoint { bundle: b, rep: Representative::Trivial { point: p1.clone(), phase: 0.0 } },
                second: BundlePoint {
                    bundle: b,
                    rep: Representative::Trivial { point: p2.clone(), phase: wrap_angle(f1 + f2) },
                },
            })
        }
        BundleId::Anyon { .. } => {
            let (s1, s2) = (anyon_sheet(&p.first), anyon_sheet(&p.second));
            let (
                Representative::Anyon { point: p1, phase: f1, winding: w1 },
                Representative::Anyon { point: p2, phase: f2, winding: w2 },
            ) = (&s1.rep, &s2.rep)
            else {
                return Err(Error::domain("representative does not match the bundle kind"));
            };
            Ok(PairClass {
                first: BundlePoint {
                    bundle: b,
                    rep: Representative::Anyon { point: p1.clone(), phase: 0.0, winding: 0 },
                },
                second: BundlePoint {
                    bundle: b,
                    rep: Representative::Anyon { point: p2.clone(), phase: wrap_angle(f1 + f2), winding: w1 + w2 },
                },
            })
        }
    }
}

/// [ξ1, ξ2] ↦ [ξ2, (−1)^f ξ1].
pub fn permutation_lift(p: &PairClass, f: u8) -> Result<PairClass> {
    if f > 1 {
        return Err(Error::domain(format!("f must be 0 or 1, got {f}")));
    }
    let moved = if f == 1 { p.first.shift_phase(PI) } else { p.first.clone() };
    Ok(PairClass { first: p.second.clone(), second: moved })
}
