use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ladders_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors share the parse-error exit code.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let report = run(&cli.command);
    let (out, err) = render(&report, cli.json);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(report.exit_code() as u8)
}
