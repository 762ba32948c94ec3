//! Runs scenarios and assembles reports.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checks::{run_check, CheckKind, Context, Needs};
use crate::report::{Entry, Report, ScenarioReport, Status};
use crate::scenario::Scenario;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Replaces every scenario's seed.
    pub seed: Option<u64>,
    /// Runs scenarios concurrently; the report order is unchanged.
    pub parallel: bool,
    /// Records wall times; turn off for byte-reproducible reports.
    pub timing: bool,
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn run_entry(s: &Scenario, kind: CheckKind, seed: u64, timing: bool) -> Entry {
    let info = kind.info();
    let samples = if info.randomized { s.samples.get(&kind).copied().unwrap_or(info.default_samples) } else { 0 };
    let threshold = s.thresholds.get(&kind).copied().or(info.default_threshold);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(kind.stream());
    let start = Instant::now();
    let missing = match info.needs {
        Needs::Bundle if s.bundle.is_none() => Some("this check needs a `bundle`"),
        Needs::Space if s.base_space().is_none() => Some("this check needs a `space` or `bundle`"),
        _ => None,
    };
    let result = match missing {
        Some(m) => Err(m.to_string()),
        None => {
            let mut cx = Context { scenario: s, tol: s.tolerances, samples, threshold, rng };
            run_check(kind, &mut cx)
        }
    };
    let wall_time_ms = timing.then(|| millis(start));
    match result {
        Ok(o) => Entry {
            check: kind,
            status: if o.passed { Status::Pass } else { Status::Fail },
            measured: o.measured,
            expected: o.expected,
            detail: o.detail,
            samples,
            threshold,
            wall_time_ms,
        },
        Err(why) => Entry {
            check: kind,
            status: Status::Error,
            measured: Default::default(),
            expected: Default::default(),
            detail: why,
            samples,
            threshold,
            wall_time_ms,
        },
    }
}

/// Runs every check of a scenario in order. A failing or erroring check
/// does not stop the ones after it.
pub fn run_scenario(s: &Scenario, opts: &RunOptions) -> ScenarioReport {
    let start = Instant::now();
    let seed = opts.seed.or(s.seed);
    let entries: Vec<Entry> = s.checks.iter().map(|&k| run_entry(s, k, seed.unwrap_or(0), opts.timing)).collect();
    let status = if entries.iter().all(|e| e.status == Status::Pass) { Status::Pass } else { Status::Fail };
    ScenarioReport {
        name: s.name.clone(),
        target: s.target(),
        seed,
        status,
        tolerances: s.tolerances,
        entries,
        wall_time_ms: opts.timing.then(|| millis(start)),
    }
}

pub fn run_all(scenarios: &[Scenario], opts: &RunOptions) -> Report {
    let reports = if opts.parallel {
        scenarios.par_iter().map(|s| run_scenario(s, opts)).collect()
    } else {
        scenarios.iter().map(|s| run_scenario(s, opts)).collect()
    };
    Report::new(reports)
}
