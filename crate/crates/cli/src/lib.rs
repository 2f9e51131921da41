//! Front end for `ladders-core`: argument definitions, command handlers and
//! the property suites behind `ladders check`.

pub mod args;
pub mod checks;
pub mod commands;
pub mod report;

pub use args::Cli;
pub use commands::run;
pub use report::{CommandReport, Status};

/// Renders a report: the text lines (or JSON) on stdout, diagnostics on
/// stderr.
pub fn render(report: &CommandReport, json: bool) -> (String, String) {
    let out = if json {
        serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
    } else {
        report.lines.iter().map(|l| format!("{l}\n")).collect()
    };
    let err = report
        .diagnostics
        .iter()
        .map(|d| format!("{d}\n"))
        .collect();
    (out, err)
}
