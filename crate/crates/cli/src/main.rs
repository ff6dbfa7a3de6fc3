use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use packhopf_cli::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, err, code) = run(&cli);
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
