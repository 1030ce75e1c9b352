fn main() {
    std::process::exit(hopfforge::cli::main());
}
