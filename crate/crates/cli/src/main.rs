use std::process::ExitCode;

use clap::Parser;

use hasse_cli::{render_error, run, RunConfig, INPUT_ERROR_EXIT};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render(&config));
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(err) => {
            match config.format {
                hasse_cli::Format::Text => eprint!("{}", render_error(&config, &err)),
                hasse_cli::Format::Structured => print!("{}", render_error(&config, &err)),
            }
            ExitCode::from(INPUT_ERROR_EXIT as u8)
        }
    }
}
