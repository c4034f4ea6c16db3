use clap::Parser;

use horocoh::cli::{run, Cli, RunConfig};

fn main() {
    let config = RunConfig::from(Cli::parse());
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(&config, &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
