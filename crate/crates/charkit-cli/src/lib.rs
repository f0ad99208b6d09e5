//! Command-line surface for exact order-2 character evaluation: single-case
//! evaluation, verification sweeps of the closed forms against the oracle,
//! and table emission.

pub mod args;
pub mod commands;
pub mod engine;
pub mod parse;
pub mod records;

use clap::Parser;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Parse arguments and dispatch. Returns the process exit code: 0 on
/// success, 1 on usage errors, 2 on verification mismatches.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        args::Command::Eval(a) => commands::cmd_eval(&a),
        args::Command::Verify(a) => commands::cmd_verify(&a),
        args::Command::Table(a) => commands::cmd_table(&a),
        args::Command::Dim(a) => commands::cmd_dim(&a),
        args::Command::Eta(a) => commands::cmd_eta(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}
