mod args;
mod commands;
mod verify;

use std::process::ExitCode;

use args::{Cli, Command, Failure};
use heatkernel::Error;

const EXIT_VERIFY: u8 = 1;
const EXIT_SINGULAR: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_USAGE: u8 = 64;

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("HEATKERNEL_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("HEATKERNEL_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(format!("cannot size the worker pool: {e}")))
}

fn run() -> Result<(), Failure> {
    let cli = Cli::parse_with_config(std::env::args_os().collect())?;
    configure_threads()?;
    let output = match &cli.command {
        Command::Kernel(a) => commands::kernel(a)?,
        Command::Tau(a) => commands::tau(a)?,
        Command::Operator(a) => commands::operator(a)?,
        Command::Bessel(a) => commands::bessel(a)?,
        Command::Verify(a) => {
            let outcome = verify::verify(a)?;
            println!("{}", outcome.output);
            if let Some(c) = outcome.failure {
                return Err(Failure::Check(format!("{}: {}", c.name, c.detail)));
            }
            return Ok(());
        }
    };
    println!("{output}");
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SingularTau(_) => EXIT_SINGULAR,
        Error::InvalidParams(_)
        | Error::ParseRational(_)
        | Error::NonpositiveArgument(_)
        | Error::ZeroNode { .. }
        | Error::NodeCollision(_)
        | Error::WindowTooSmall { .. } => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Clap(e)) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
