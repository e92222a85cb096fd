use std::process::ExitCode;

use clap::Parser;
use phi_descent::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match phi_descent::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("phi-descent: {e:#}");
            ExitCode::from(e.exit_code())
        }
    }
}
