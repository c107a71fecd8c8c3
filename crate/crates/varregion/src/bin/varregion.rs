fn main() {
    std::process::exit(varregion::cli::run(std::env::args_os()));
}
