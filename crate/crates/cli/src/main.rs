use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use cvi_cli::{execute, Cli, CliError};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match execute(cli, &args) {
        Ok(rendered) => {
            let written = match &rendered.out {
                Some(path) => std::fs::write(path, &rendered.text)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
                None => std::io::stdout()
                    .write_all(rendered.text.as_bytes())
                    .map_err(|e| CliError::Input(format!("stdout: {e}"))),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code())
}
