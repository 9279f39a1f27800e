fn main() {
    std::process::exit(flowpath::cli::run(std::env::args_os()));
}
