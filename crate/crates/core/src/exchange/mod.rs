//! Exchange paths and the statistics they select.
//!
//! An exchange moves particle 1 to the position of particle 2 by g1 = exp(Z1)
//! and particle 2 to the position of particle 1 by g2 = exp(Z2), with Z1, Z2
//! multiples of one Lie-algebra element. TypeII exchanges compose to a
//! rotation by an odd multiple of 2π without the particles meeting; TypeI
//! exchanges always pass through the diagonal. Lifting both legs to the
//! bundle gives [g1·ξ1, g2·ξ2] = e^{iθ}·[ξ2, ξ1], and e^{iθ} decides the
//! statistics.

mod circle;
mod path;
mod phase;

pub use circle::{common_circle, common_circle_about, Circle};
pub use path::{
    admissible_pair, build_exchange, build_pair_exchange, diagonal_crossing, Crossing, ExchangeOptions, Generator,
    Mode, PairPath,
};
pub use phase::{
    adjoint_exchange_massive, admissible_phases, anyon_exchange_phases, classify_statistics, exchange_phase,
    reference_lift, start_class, ExchangeOutcome, StatisticsVerdict, VerdictDiagnostic, VerdictKind,
};
