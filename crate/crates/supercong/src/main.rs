fn main() {
    std::process::exit(supercong::run_cli())
}
