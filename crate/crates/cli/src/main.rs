fn main() {
    std::process::exit(tspkit_cli::run_cli(std::env::args_os()));
}
