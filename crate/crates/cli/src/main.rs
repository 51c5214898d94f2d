use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use xramsey_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.common.out.clone();
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("xramsey: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = match &out_path {
        Some(path) => std::fs::write(path, &output.text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(output.text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    };
    if let Err(e) = written {
        eprintln!("xramsey: {e}");
        return ExitCode::from(e.exit_code());
    }
    if output.status.exit_code() != 0 {
        eprintln!("xramsey: verification failed");
    }
    ExitCode::from(output.status.exit_code())
}
