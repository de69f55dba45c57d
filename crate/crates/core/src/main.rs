use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use prehomog::cli::{run, Cli, JobSpec, EXIT_INPUT};

fn main() -> ExitCode {
    if let Some(n) = std::env::var("PREHOMOG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // an already initialized pool is fine; the cap is best effort
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let cli = Cli::parse();
    let out = match JobSpec::from_cli(cli) {
        Ok(job) => run(&job),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
