fn main() {
    std::process::exit(qsusy::cli::run(std::env::args_os()));
}
