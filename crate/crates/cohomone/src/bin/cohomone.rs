//! The `cohomone` binary: parses its command line and delegates to the
//! library's CLI dispatch.
//!
//! Exit codes follow the engine's contract (`0` success / `CONFIRMED`,
//! `1` errors, `2` `ELIMINATED`, `3` `UNDETERMINED`), so command-line usage
//! errors exit with `1` rather than clap's default `2`; `--help` and
//! `--version` exit with `0`.

use clap::Parser;
use cohomone::cli::{run, Cli, EXIT_ERROR, EXIT_OK};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}
