fn main() {
    std::process::exit(hellyspace::cli::run_command(std::env::args_os()));
}
