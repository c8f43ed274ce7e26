fn main() {
    std::process::exit(restricted_sumsets::cli::parse_and_run(std::env::args_os()));
}
