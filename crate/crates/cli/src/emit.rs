//! Report output: sorted-key JSON and a fixed-width text table.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Serializes `r` with object keys sorted at every level; arrays keep their
/// order (scenarios as listed, entries in check order).
pub fn to_json(r: &Report) -> String {
    // serde_json's Value uses a BTreeMap, so the round trip sorts the keys.
    let value = serde_json::to_value(r).expect("reports serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

const WIDTHS: [usize; 4] = [28, 20, 6, 11];

fn row(out: &mut String, cells: [&str; 4], detail: &str) {
    for (cell, w) in cells.iter().zip(WIDTHS) {
        let mut c: String = cell.chars().take(w).collect();
        if cell.chars().count() > w {
            c.pop();
            c.push('…');
        }
        let _ = write!(out, "{c:<w$}  ");
    }
    out.push_str(detail);
    let trimmed = out.trim_end_matches(' ').len();
    out.truncate(trimmed);
    out.push('\n');
}

pub fn to_text(r: &Report) -> String {
    let mut out = String::new();
    row(&mut out, ["SCENARIO", "CHECK", "STATUS", "TIME"], "DETAIL");
    for s in &r.scenarios {
        if s.entries.is_empty() {
            row(&mut out, [&s.name, "-", "-", "-"], "no checks");
        }
        for e in &s.entries {
            let time = e.wall_time_ms.map_or_else(|| "-".to_string(), |t| format!("{t:.1} ms"));
            row(&mut out, [&s.name, e.check.name(), e.status.as_str(), &time], &e.detail);
        }
    }
    let _ = writeln!(
        out,
        "\n{}: {} passed, {} failed, {} errors (spinstat {})",
        r.status.as_str(),
        r.summary.pass,
        r.summary.fail,
        r.summary.error,
        r.version
    );
    out
}

pub fn emit_report(r: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Text => to_text(r),
        Format::Json => to_json(r),
    }
    .into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::{run_all, RunOptions};
    use crate::scenario::parse_scenarios;

    fn report() -> Report {
        let text = r#"[{"name": "pair", "space": {"kind": "spin_sphere", "s": 0.3}, "checks": ["integrality"]},
                       {"name": "half", "bundle": {"kind": "hopf", "n": 1}, "checks": ["integrality"]}]"#;
        run_all(&parse_scenarios(text, None).unwrap(), &RunOptions::default())
    }

    #[test]
    fn json_is_stable_and_sorted() {
        let r = report();
        let a = to_json(&r);
        assert_eq!(a, to_json(&r));
        let summary = a.find("\"summary\"").unwrap();
        let scenarios = a.find("\"scenarios\"").unwrap();
        let version = a.rfind("\"version\"").unwrap();
        assert!(scenarios < summary && summary < version);
    }

    #[test]
    fn failed_entry_is_marked() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&report())).unwrap();
        assert_eq!(v["scenarios"][0]["entries"][0]["status"], "fail");
        assert_eq!(v["scenarios"][1]["entries"][0]["status"], "pass");
        assert_eq!(v["status"], "fail");
    }

    #[test]
    fn text_rows_are_aligned() {
        let text = to_text(&report());
        let lines: Vec<&str> = text.lines().take(3).collect();
        let col = |l: &str| l.char_indices().nth(WIDTHS[0] + 2).map(|(i, _)| i).unwrap();
        assert!(lines.iter().all(|l| l.is_char_boundary(col(l))));
        assert!(lines[1][col(lines[1])..].starts_with("integrality"));
        assert!(lines[0][col(lines[0])..].starts_with("CHECK"));
    }
}
