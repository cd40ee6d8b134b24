fn main() {
    std::process::exit(nilhom::cli::run(std::env::args_os()));
}
