fn main() {
    std::process::exit(qmob::cli::run(std::env::args_os()));
}
