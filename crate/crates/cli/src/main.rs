use clap::Parser;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = detold::app::Cli::parse();
    std::process::exit(detold::app::run(cli, &argv));
}
