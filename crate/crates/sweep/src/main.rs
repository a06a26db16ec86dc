fn main() {
    std::process::exit(fmr_sweep::cli::run(std::env::args_os()));
}
