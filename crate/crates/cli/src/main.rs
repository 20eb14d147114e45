use std::path::PathBuf;
use std::process::ExitCode as ProcessExit;

use clap::Parser;
use frobroot_cli::{load_jobspec, run_command, Command, ExitCode, RunOptions};

#[derive(Parser, Debug)]
#[command(name = "frobroot", version, about = "HSL numbers and Frobenius root ideals over F_p")]
struct Cli {
    /// gb, ie, colon, intersect, hsl, stratify, finjective or localhsl
    command: Command,
    /// Job file
    file: PathBuf,
    /// Print the report as JSON
    #[arg(long)]
    json: bool,
    /// Bound on the chain length (overrides the job's max_e)
    #[arg(long = "max-e")]
    max_e: Option<usize>,
    /// Frobenius exponent for `ie`
    #[arg(long)]
    e: Option<u32>,
    /// Comma-separated generators of the prime for `localhsl`
    #[arg(long)]
    prime: Option<String>,
    /// Comma-separated second ideal for `colon` and `intersect` (default: omega)
    #[arg(long)]
    with: Option<String>,
    /// Element u of the Frobenius-map module (overrides the job's u)
    #[arg(long)]
    u: Option<String>,
}

fn threads_from_env() -> Result<usize, String> {
    match std::env::var("FROBROOT_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("FROBROOT_THREADS must be a positive integer, got `{v}`")),
    }
}

fn main() -> ProcessExit {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ProcessExit::from(if e.use_stderr() { ExitCode::Input.code() as u8 } else { 0 });
        }
    };
    let threads = match threads_from_env() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ProcessExit::from(ExitCode::Input.code() as u8);
        }
    };
    let spec = match load_jobspec(&cli.file) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("{}:{e}", cli.file.display());
            return ProcessExit::from(ExitCode::Input.code() as u8);
        }
    };
    let opts = RunOptions { max_e: cli.max_e, e: cli.e, prime: cli.prime, with: cli.with, u: cli.u, threads };
    let (report, code) = run_command(cli.command, &spec, &opts);
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if let Some(msg) = &report.message {
        eprintln!("error: {msg}");
    }
    ProcessExit::from(code.code() as u8)
}
