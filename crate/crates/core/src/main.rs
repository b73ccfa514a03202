fn main() {
    env_logger::init();
    std::process::exit(flatcover::cli::main());
}
