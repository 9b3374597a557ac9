use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lieho_cli::{execute, output_target, render, write_atomically, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let doc = match execute(&cli, &command_line) {
        Ok(doc) => doc,
        Err(f) => {
            eprintln!("{f}");
            return ExitCode::from(f.exit_code() as u8);
        }
    };
    let (out, format) = output_target(&cli);
    let text = render(&doc, format);
    let written = match out {
        Some(path) => write_atomically(&path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("could not write the report: {e}");
        return ExitCode::from(1);
    }
    if doc.exit_code() != 0 {
        if let lieho_cli::Results::Verify { suites } = &doc.results {
            for c in suites.iter().flat_map(|s| s.failures()) {
                eprintln!("FAIL {}: {}", c.name, c.detail);
            }
        }
    }
    ExitCode::from(doc.exit_code() as u8)
}
