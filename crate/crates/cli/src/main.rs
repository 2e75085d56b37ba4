fn main() {
    std::process::exit(edim_cli::run(std::env::args_os()));
}
