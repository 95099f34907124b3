fn main() {
    std::process::exit(abfrac_cli::run(std::env::args_os()));
}
