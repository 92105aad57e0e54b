fn main() {
    std::process::exit(superfmt::cli::main());
}
