fn main() {
    std::process::exit(sketchlsq::cli::run(std::env::args_os()));
}
