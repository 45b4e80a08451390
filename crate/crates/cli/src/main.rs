use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use degenscope_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            if !cli.global.quiet {
                for w in &out.envelope.warnings {
                    eprintln!("warning: {w}");
                }
                let mut stdout = std::io::stdout().lock();
                if stdout
                    .write_all(out.render(cli.global.csv).as_bytes())
                    .is_err()
                {
                    return ExitCode::from(4);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("degenscope: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
