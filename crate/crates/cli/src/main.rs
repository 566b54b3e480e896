fn main() {
    std::process::exit(mgeo_cli::run());
}
