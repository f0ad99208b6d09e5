fn main() {
    std::process::exit(charkit_cli::run(std::env::args_os()));
}
