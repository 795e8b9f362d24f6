fn main() {
    std::process::exit(rexlab::cli::run(std::env::args_os()));
}
