use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use gaussphi_cli::{execute, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = execute(&cli, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
