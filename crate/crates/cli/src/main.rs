use std::process::ExitCode;

use clap::Parser;
use qmf_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout().lock();
    let exit = run(&cli, stdout);
    ExitCode::from(exit.code())
}
