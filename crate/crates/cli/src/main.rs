use std::process::ExitCode;

use clap::Parser;

mod commands;

use commands::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            if cli.global.pretty {
                eprintln!("{}", out.summary);
            }
            println!("{}", out.json);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_status(&e))
        }
    }
}
