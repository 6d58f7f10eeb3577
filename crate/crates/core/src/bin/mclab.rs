use clap::Parser;

fn main() {
    let cli = mclab::cli::Cli::parse();
    let code = mclab::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
