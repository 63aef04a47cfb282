fn main() {
    std::process::exit(planar::cli::main(std::env::args_os()));
}
