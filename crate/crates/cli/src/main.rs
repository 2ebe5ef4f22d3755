use std::io;
use std::process::ExitCode;

use clap::Parser;

use pksums_cli::cli::Cli;
use pksums_cli::{commands, config, exit, exit_code, ledger, output};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    let args: Vec<_> = std::env::args_os().collect();
    if let Err(msg) = config::apply(&args) {
        eprintln!("error: {msg}");
        return ExitCode::from(exit::USAGE as u8);
    }
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.threads {
        pksums_core::sieve::set_max_workers(n as usize);
    }

    let out = match commands::run(&cli.command) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    if let Err(e) = output::render(&out, cli.format, io::stdout().lock(), io::stderr().lock()) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(exit::DATA as u8);
    }
    if !cli.no_ledger {
        let record = ledger::RunRecord::new(cli.command.name(), &out);
        if let Err(e) = ledger::append(&cli.ledger, &record) {
            eprintln!("error: appending to ledger {}: {e}", cli.ledger.display());
            return ExitCode::from(exit::DATA as u8);
        }
    }
    ExitCode::SUCCESS
}
