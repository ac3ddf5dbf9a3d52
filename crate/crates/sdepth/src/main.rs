fn main() {
    let code = sdepth::cli::run(std::env::args().collect());
    std::process::exit(code);
}
