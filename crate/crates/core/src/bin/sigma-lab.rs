fn main() {
    std::process::exit(sigma_lab::cli::run(std::env::args_os()));
}
