use clap::Parser;

fn main() {
    let cli = poincare_cli::Cli::parse();
    if let Err(e) = poincare_cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
