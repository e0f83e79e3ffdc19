use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match hsolab::cli::Cli::try_parse() {
        Ok(cli) => cli,
        // Prints help/version with status 0, usage errors with status 2.
        Err(err) => err.exit(),
    };
    match hsolab::cli::run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
