fn main() {
    std::process::exit(beauville::cli::run(std::env::args_os()));
}
