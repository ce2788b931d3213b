use clap::Parser;
use pinnacle_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(err) = pinnacle_cli::run(&cli, &mut out) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
