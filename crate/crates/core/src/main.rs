fn main() {
    std::process::exit(hyscat::cli::execute(std::env::args_os()));
}
