use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = schreier_cli::Cli::parse();
    match schreier_cli::run(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(err) => {
            let _ = write!(std::io::stderr(), "{}", err.message);
            if !err.message.ends_with('\n') {
                let _ = writeln!(std::io::stderr());
            }
            ExitCode::from(err.code)
        }
    }
}
