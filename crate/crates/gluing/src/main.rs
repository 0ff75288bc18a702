fn main() {
    std::process::exit(gluing::cli::run());
}
