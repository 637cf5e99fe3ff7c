use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gradealg_cli::{run, Cli};

fn main() -> ExitCode {
    // Usage errors exit with 1; 2 is reserved for exceeded limits.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if let Some(path) = &cli.command.common().json {
                if path.as_os_str() == "-" {
                    let _ = stdout.write_all(out.json.as_bytes());
                } else if let Err(e) = std::fs::write(path, &out.json) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
