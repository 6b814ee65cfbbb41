fn main() {
    std::process::exit(reqlint::cli::run(std::env::args_os()));
}
