fn main() {
    std::process::exit(qplactic::cli::main());
}
