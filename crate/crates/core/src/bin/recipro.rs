fn main() {
    std::process::exit(recipro::cli::run(std::env::args_os()));
}
