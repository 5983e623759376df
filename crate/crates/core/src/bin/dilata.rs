fn main() {
    std::process::exit(dilatations::cli::main_with_args(std::env::args()));
}
