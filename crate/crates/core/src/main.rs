fn main() {
    std::process::exit(ranklash::cli::run_cli(std::env::args_os()));
}
