fn main() {
    std::process::exit(polarity_core::cli::run(std::env::args_os()));
}
