use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spinstat_cli::checks::{CheckKind, Needs};
use spinstat_cli::{emit_report, load_scenarios, run_all, Format, LoadError, RunOptions};

#[derive(Parser)]
#[command(name = "spinstat", version, about = "Run spin-statistics verification scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every scenario in a scenario file and report the results.
    Verify {
        scenario_file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for every scenario, replacing the seeds in the file.
        #[arg(long)]
        seed: Option<u64>,
        /// Run scenarios concurrently.
        #[arg(long)]
        parallel: bool,
        /// Leave wall times out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the available checks.
    ListChecks,
}

fn list_checks() -> String {
    let mut out = format!("{:<20}  {:<7}  {:>7}  {:>9}  {}\n", "CHECK", "NEEDS", "SAMPLES", "THRESHOLD", "DESCRIPTION");
    for kind in CheckKind::ALL {
        let info = kind.info();
        let needs = match info.needs {
            Needs::Nothing => "-",
            Needs::Space => "space",
            Needs::Bundle => "bundle",
        };
        let samples = if info.randomized { info.default_samples.to_string() } else { "-".into() };
        let threshold = info.default_threshold.map_or_else(|| "-".to_string(), |t| format!("{t:.0e}"));
        out.push_str(&format!("{:<20}  {needs:<7}  {samples:>7}  {threshold:>9}  {}\n", kind.name(), info.summary));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListChecks => {
            print!("{}", list_checks());
            ExitCode::SUCCESS
        }
        Command::Verify { scenario_file, format, out, seed, parallel, no_timing } => {
            let scenarios = match load_scenarios(&scenario_file, seed) {
                Ok(s) => s,
                Err(e) => {
                    let kind = match e {
                        LoadError::Io { .. } => "error",
                        LoadError::Parse { .. } => "parse error",
                    };
                    eprintln!("{kind}: {e}");
                    return ExitCode::from(2);
                }
            };
            let report = run_all(&scenarios, &RunOptions { seed, parallel, timing: !no_timing });
            let bytes = emit_report(&report, format);
            let written = match &out {
                Some(path) => std::fs::write(path, &bytes),
                None => std::io::stdout().lock().write_all(&bytes),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
