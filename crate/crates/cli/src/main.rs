fn main() {
    std::process::exit(jtqes::main_with_args(std::env::args_os()));
}
