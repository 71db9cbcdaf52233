mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Rendered, Verdict};

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Compute(a) => commands::compute(a, cli.format, out),
        Command::Verify(a) => commands::verify(a, cli.format, out),
        Command::Sweep(a) => {
            let (rendered, echo) = commands::sweep(a, cli.format, out)?;
            eprintln!("# config {echo}");
            Ok(rendered)
        }
        Command::Roof(a) => commands::roof(a, cli.format, out),
        Command::Criteria(a) => commands::criteria(a, cli.format, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|r| {
        output::emit(cli.out.as_deref(), &r.text)
            .map(|_| r.verdict)
            .map_err(CliError::from)
    }) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
