//! `votekit` command-line interface.

mod cache;
mod commands;
mod output;

use std::io::{ErrorKind, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use commands::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            match outcome
                .report
                .write(cli.format, start.elapsed(), &mut out)
                .and_then(|_| out.flush())
            {
                Err(e) if e.kind() == ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
                Ok(()) => {}
            }
            if outcome.mismatches.is_empty() {
                ExitCode::SUCCESS
            } else {
                for m in &outcome.mismatches {
                    eprintln!("certified count mismatch: {m}");
                }
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
