use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use greenkern::cli::{run, Cli};
use greenkern::{init_threads, CliError};

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {}: {e}", e.kind());
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    // clap exits with 2 on parse errors and 0 for --help / --version.
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        return fail(&e);
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => fail(&e),
    }
}
