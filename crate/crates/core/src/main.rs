use clap::Parser;

fn main() {
    let cli = redei::cli::Cli::parse();
    std::process::exit(redei::cli::run(cli));
}
