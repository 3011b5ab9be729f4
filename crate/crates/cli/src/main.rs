mod args;
mod commands;
mod grid;
mod presets;
mod table;

use args::{Cli, Command};
use clap::Parser;
use commands::CliError;
use std::process::ExitCode;

const EXIT_WARNING: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SOC_LAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|n| *n >= 1)
        .ok_or_else(|| CliError::Usage(format!("SOC_LAB_THREADS must be a positive integer (got '{raw}')")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("SOC_LAB_THREADS: {e}")))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let (result, output) = match &cli.command {
        Command::Eval(a) => (commands::eval(a), &a.output),
        Command::Meta(a) => (commands::meta(a), &a.output),
        Command::LambdaEps(a) => (commands::lambda_eps_sweep(a), &a.output),
        Command::Soc(a) => (commands::soc(a), &a.output),
        Command::Bounds(a) => (commands::bounds(a), &a.output),
        Command::Asymptotic(a) => (commands::asymptotic(a), &a.output),
        Command::Simulate(a) => (commands::simulate_cmd(a), &a.output),
        Command::CompareTc(a) => (commands::compare_tc(a), &a.output),
    };
    let (table, manifest) = result?;
    let text = table::emit(&table, &manifest, output.json);
    table::write_out(&text, output.out.as_deref()).map_err(CliError::Io)?;
    if table.has_warnings() {
        eprintln!("warning: some rows carry numerical warnings (see the warning column)");
    }
    Ok(table.has_warnings())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_WARNING),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(e @ CliError::Io(_)) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_WARNING)
        }
    }
}
