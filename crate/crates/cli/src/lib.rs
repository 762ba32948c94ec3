//! Batch runner for the spinstat verification checks.
//!
//! A scenario file lists scenarios; each names a phase space or bundle, a
//! list of checks, a seed and optional tolerance overrides. Running a file
//! produces a [`report::Report`] that can be emitted as JSON or as a text
//! table.

pub mod checks;
pub mod emit;
pub mod report;
pub mod runner;
pub mod scenario;

pub use checks::CheckKind;
pub use emit::{emit_report, Format};
pub use report::{Report, Status};
pub use runner::{run_all, run_scenario, RunOptions};
pub use scenario::{load_scenarios, parse_scenarios, LoadError, ParseError, Scenario};
