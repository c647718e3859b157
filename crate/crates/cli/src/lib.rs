//! Definition language, reports and command driver for `bihom`.
//!
//! Exit status: 0 when every verdict holds (or a solver ran), 1 on a
//! mathematical violation, 2 on usage, input or parse errors.

pub mod builtin;
pub mod cli;
pub mod commands;
pub mod dsl;
pub mod report;

use std::ffi::OsString;
use std::path::Path;
use std::time::Instant;

use clap::Parser;

use crate::cli::{Cli, Command, Io, OutputFormat};
use crate::dsl::{parse, serialize, Document};
use crate::report::Format;

/// What a run printed and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Reads and parses a definition file; errors carry the path and position.
pub fn load(path: &Path) -> Result<Document, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn document(io: &Io) -> Result<Document, String> {
    if io.input.is_empty() && io.builtin.is_empty() {
        return Err("no input: give --input FILE or --builtin NAME".into());
    }
    let mut doc = Document::new();
    for path in &io.input {
        doc.extend(load(path)?)
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    for b in &io.builtin {
        doc.extend(b.document())
            .map_err(|e| format!("builtin {}: {e}", b.name()))?;
    }
    Ok(doc)
}

/// Runs one command line (including the program name) without touching the
/// process's own streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let doc = match document(&cli.io) {
        Ok(d) => d,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let start = Instant::now();
    let (code, text) = match &cli.command {
        Command::Fmt => (0, serialize(&doc)),
        cmd => match commands::execute(cmd, &doc) {
            Ok(mut report) => {
                let format = match cli.io.format {
                    OutputFormat::Text => {
                        report.elapsed = Some(start.elapsed());
                        Format::Text
                    }
                    OutputFormat::Json => Format::Json,
                };
                (report.exit_code(), report.render(format))
            }
            Err(e) => return Outcome::usage(format!("error: {e}\n")),
        },
    };
    match &cli.io.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}
