use std::io::Write;
use std::process::ExitCode;

use gpatoms::{parse_args, render, run, CliError, Parsed};

fn main() -> ExitCode {
    match execute() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn execute() -> Result<u8, CliError> {
    let cfg = match parse_args(std::env::args_os())? {
        Parsed::Run(cfg) => cfg,
        Parsed::Info(text) => {
            print!("{text}");
            return Ok(0);
        }
    };
    let outcome = run(&cfg)?;
    let text = render(&outcome.report, cfg.output)?;
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Output(e.to_string()))?;
    Ok(if outcome.success { 0 } else { 1 })
}
