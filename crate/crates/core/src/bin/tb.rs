use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tournament_bounds::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.text.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("tb: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
