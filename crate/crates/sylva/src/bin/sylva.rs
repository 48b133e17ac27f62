fn main() {
    std::process::exit(sylva::cli::run());
}
