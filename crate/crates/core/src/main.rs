fn main() {
    std::process::exit(f4label::cli::run(std::env::args().skip(1)));
}
