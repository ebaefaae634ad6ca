use clap::Parser;

use cayley_decomp::cli::{run, Cli, EXIT_ERROR};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            // usage mistakes share the generic error code, keeping exit
            // codes 0..3 reserved for analysis verdicts
            eprint!("{e}");
            std::process::exit(EXIT_ERROR as i32);
        }
        Err(e) => {
            // --help and --version
            print!("{e}");
            std::process::exit(0);
        }
    };
    std::process::exit(run(cli) as i32);
}
