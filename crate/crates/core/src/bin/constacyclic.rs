fn main() {
    std::process::exit(constacyclic::cli::main());
}
