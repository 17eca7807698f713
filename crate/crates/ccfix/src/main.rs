use std::io::Write;
use std::process::ExitCode;

use ccfix::{run, Cli, CliError};
use clap::Parser;

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CCFIX_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        emit(&cli, &out.text)?;
        out.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ccfix: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
