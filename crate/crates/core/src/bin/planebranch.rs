use std::process::ExitCode;

use clap::Parser;
use planebranch::cli::{error_document, render_json, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            println!("{}", out.render(cli.json_indent));
            if out.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            println!("{}", render_json(&error_document(&e), cli.json_indent));
            ExitCode::FAILURE
        }
    }
}
