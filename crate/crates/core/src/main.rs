fn main() {
    std::process::exit(m0n::cli::main());
}
