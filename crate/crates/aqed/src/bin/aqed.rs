fn main() {
    std::process::exit(aqed::cli::run());
}
