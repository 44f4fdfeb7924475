fn main() {
    std::process::exit(nubar::cli::main_with_args(std::env::args_os()));
}
