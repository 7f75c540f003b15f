mod args;
mod commands;
mod error;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

fn configure_threads(flag: Option<usize>) -> CliResult<()> {
    let from_env = std::env::var("CHIRALITY_THREADS")
        .ok()
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("CHIRALITY_THREADS must be a positive integer, got {v:?}")))
        })
        .transpose()?;
    if let Some(n) = flag.or(from_env) {
        if n == 0 {
            return Err(CliError::Usage("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Threads(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult<bool> {
    configure_threads(cli.threads)?;
    match cli.command {
        Command::Gen {
            vertices,
            min_vertices,
            edges,
            connected,
            nonplanar,
            format,
        } => commands::gen(out, vertices, min_vertices, edges, connected, nonplanar, format),
        Command::Planar(input) => commands::planar(out, &input),
        Command::Aut(input) => commands::aut(out, &input),
        Command::Minor { input, target, replay } => commands::minor(out, &input, &target, replay.as_deref()),
        Command::Certify(input) => commands::certify(out, &input),
        Command::Classify { max_size, audit, out: path } => commands::classify(out, max_size, audit, path.as_deref()),
        Command::Catalog { validate, format } => commands::catalog(out, validate, format),
        Command::Report { file, json } => commands::report_cmd(out, &file, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (_, Err(e)) => {
            eprintln!("error: failed to write output: {e}");
            ExitCode::from(1)
        }
    }
}
