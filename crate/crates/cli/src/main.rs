use std::process::ExitCode;

use weingarten_cli::{precision_from, run, CliError, PRECISION_VAR};

fn main() -> ExitCode {
    let precision = std::env::var(PRECISION_VAR).ok();
    let outcome = precision_from(precision.as_deref()).and_then(|p| run(std::env::args_os(), p));
    match outcome {
        Ok(doc) => {
            print!("{}", doc.to_json());
            ExitCode::SUCCESS
        }
        Err(e @ CliError::Clap(_)) => {
            if let CliError::Clap(inner) = &e {
                let _ = inner.print();
            }
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
