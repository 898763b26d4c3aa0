fn main() {
    std::process::exit(macexp_cli::run(std::env::args_os()));
}
