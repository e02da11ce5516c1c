//! File formats, JSON reports and the `scrows` command-line front end.
//!
//! The binary is a thin wrapper around [`main_with`], which the integration
//! tests also drive.

pub mod bench;
pub mod commands;
pub mod engine;
pub mod error;
pub mod io;
pub mod oracle;
pub mod report;

use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::Cli;
pub use error::CliError;

/// Runs one command line and returns the process exit code. Results go to
/// `out`, diagnostics to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            let text = if cli.json { report.json() } else { report.text() };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
