fn main() {
    std::process::exit(simplejac::cli::main_with_args(std::env::args_os()));
}
