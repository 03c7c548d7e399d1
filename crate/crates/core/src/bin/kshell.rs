use clap::Parser;

use kshell::cli::{run, Cli, RunConfig};

fn main() {
    let report = run(&RunConfig::from(Cli::parse()));
    if report.exit == kshell::cli::EXIT_INPUT || report.exit == kshell::cli::EXIT_INTERNAL {
        eprint!("{}", report.output);
    } else {
        print!("{}", report.output);
    }
    std::process::exit(report.exit);
}
