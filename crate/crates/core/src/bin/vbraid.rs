fn main() {
    std::process::exit(vbraid::cli::main());
}
