fn main() {
    std::process::exit(ramanujan::cli_main(std::env::args_os()));
}
